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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stabeam/image.hpp"

namespace stabeam {

/// |analytic signal| of a real sequence, via a frequency-domain Hilbert
/// transform (one-sided spectrum doubling). Requires at least 4 samples.
std::vector<double> analytic_envelope(std::span<const double> signal);
std::vector<double> analytic_envelope(std::span<const float> signal);

/// Envelope of an LRI/HRI/PA image, computed down each column (depth axis).
Image envelope(const Image& image, std::size_t threads = 1);

/// 20 log10(env / max(env)) floored at -dynamic_range. An all-zero image maps
/// to -dynamic_range everywhere.
Image log_compress(const Image& envelope_image, double dynamic_range = 60.0);

/// 8-bit grey levels for a DB image: round(255 * (v + DR) / DR).
std::vector<std::uint8_t> gray_levels(const Image& db_image, double dynamic_range);

}  // namespace stabeam
