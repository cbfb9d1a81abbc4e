/*
 * Copyright (c) 2026 The sta-beam Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "stabeam/array_model.hpp"

namespace stabeam {

/// T(m, n) = (|p - tx| + |p - rx|) / c. Symmetric in tx and rx.
inline double round_trip_delay(Vec2 tx, Vec2 rx, Vec2 point, double sound_speed) {
  return (distance(point, tx) + distance(point, rx)) / sound_speed;
}

/// A delay expressed in samples as an integer shift plus a fractional part,
/// coarse + fine == t * fs.
struct DelaySplit {
  std::size_t coarse = 0;
  double fine = 0.0;  // [0, 1)
};

/// Splits a nonnegative fractional sample index.
inline DelaySplit split_position(double position) {
  const double coarse = std::floor(position);
  return {static_cast<std::size_t>(coarse), position - coarse};
}

/// Throws ValidationError for negative or non-finite t.
DelaySplit split_delay(double t, double fs);

/// Two-tap linear interpolation trace[c] * (1 - f) + trace[c + 1] * f.
/// Reads whose second tap falls past the end of the trace return 0.
template <typename T>
double read_interpolated(std::span<const T> trace, DelaySplit split) {
  if (split.coarse + 1 >= trace.size()) return 0.0;
  return static_cast<double>(trace[split.coarse]) * (1.0 - split.fine) +
         static_cast<double>(trace[split.coarse + 1]) * split.fine;
}

/// Same as above for a raw fractional index. Negative, non-finite or
/// out-of-window positions read as 0.
template <typename T>
double read_interpolated(std::span<const T> trace, double position) {
  if (!(position >= 0.0) || position >= static_cast<double>(trace.size())) return 0.0;
  return read_interpolated(trace, split_position(position));
}

}  // namespace stabeam
