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
#include <string_view>
#include <vector>

namespace stabeam {

/// Cartesian pixel lattice. Pixel centers are cell-centred:
/// x_i = x_min + (i + 0.5) * dx with dx = (x_max - x_min) / nx, same for z.
struct ImageGrid {
  double x_min = -4.0e-3;
  double x_max = 4.0e-3;
  double z_min = 20.0e-3;
  double z_max = 30.0e-3;
  std::size_t nx = 128;
  std::size_t nz = 256;

  void validate() const;

  double dx() const { return (x_max - x_min) / static_cast<double>(nx); }
  double dz() const { return (z_max - z_min) / static_cast<double>(nz); }
  double x_at(std::size_t ix) const { return x_min + (static_cast<double>(ix) + 0.5) * dx(); }
  double z_at(std::size_t iz) const { return z_min + (static_cast<double>(iz) + 0.5) * dz(); }
  std::size_t pixel_count() const { return nx * nz; }

  friend bool operator==(const ImageGrid&, const ImageGrid&) = default;
};

enum class ImageKind { kLri, kHri, kPa, kEnvelope, kDb };

std::string_view to_string(ImageKind kind);
ImageKind parse_image_kind(std::string_view text);

/// Scalar image stored row-major as [z][x].
struct Image {
  ImageGrid grid;
  ImageKind kind = ImageKind::kLri;
  std::vector<double> values;

  Image() = default;
  Image(const ImageGrid& g, ImageKind k) : grid(g), kind(k), values(g.pixel_count(), 0.0) {}

  double& at(std::size_t iz, std::size_t ix) { return values[iz * grid.nx + ix]; }
  double at(std::size_t iz, std::size_t ix) const { return values[iz * grid.nx + ix]; }

  void validate() const;
};

}  // namespace stabeam
