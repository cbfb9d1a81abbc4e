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
#include <span>
#include <string_view>
#include <vector>

#include "stabeam/acoustic_sim.hpp"
#include "stabeam/array_model.hpp"
#include "stabeam/delay.hpp"
#include "stabeam/image.hpp"

namespace stabeam {

enum class Apodization { kRectangular, kHann };

std::string_view to_string(Apodization apodization);
Apodization parse_apodization(std::string_view text);

/// Receive weights for `count` channels. Hann uses the form without zero end
/// taps, w_n = 0.5 * (1 - cos(2 pi (n + 1) / (count + 1))), so every channel
/// contributes.
std::vector<double> receive_weights(Apodization apodization, std::size_t count);

/// Time for the transmit wave of `event` to reach `point`:
///   single element:   tau_m + |p - x_m| / c
///   virtual source:   (|p - v| - z_v) / c - normalization_offset
/// PA events have no per-pixel transmit model here; see beamform_pa.
double transmit_time(const TransmitEvent& event, const ArrayGeometry& geometry, Vec2 point);

/// Delay-and-sum image of one STA/MSTA emission. Pixels whose delays fall
/// outside the recorded window contribute zero. Throws ValidationError for a
/// PA dataset or an invalid emission index.
Image beamform_lri(const RfDataSet& rf, std::size_t emission, const ImageGrid& grid,
                   Apodization apodization = Apodization::kRectangular, std::size_t threads = 1);

/// Pixel-wise sum of the LRIs in order. Throws on empty input or mismatched grids.
Image synthesize_hri(std::span<const Image> lris);

/// Every LRI of an STA/MSTA dataset.
std::vector<Image> beamform_all_lris(const RfDataSet& rf, const ImageGrid& grid,
                                     Apodization apodization = Apodization::kRectangular,
                                     std::size_t threads = 1);

/// Line-by-line PA image. Each grid column takes the nearest scan line; depth
/// samples along the line use the fixed-focus transmit model
/// t_tx(s) = T0 + (s - s_focus) / c with T0 = d_max / c.
Image beamform_pa(const RfDataSet& rf, const ImageGrid& grid,
                  Apodization apodization = Apodization::kRectangular, std::size_t threads = 1);

}  // namespace stabeam
