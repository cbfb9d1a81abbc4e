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

#include "stabeam/image.hpp"

#include <cmath>
#include <string>

#include "stabeam/errors.hpp"

namespace stabeam {

void ImageGrid::validate() const {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max))
    throw ValidationError("grid: x_min must be < x_max");
  if (!(std::isfinite(z_min) && std::isfinite(z_max) && 0.0 < z_min && z_min < z_max))
    throw ValidationError("grid: need 0 < z_min < z_max");
  if (nx < 1 || nz < 1) throw ValidationError("grid: nx and nz must be >= 1");
}

std::string_view to_string(ImageKind kind) {
  switch (kind) {
    case ImageKind::kLri: return "LRI";
    case ImageKind::kHri: return "HRI";
    case ImageKind::kPa: return "PA";
    case ImageKind::kEnvelope: return "ENVELOPE";
    case ImageKind::kDb: return "DB";
  }
  return "?";
}

ImageKind parse_image_kind(std::string_view text) {
  if (text == "LRI") return ImageKind::kLri;
  if (text == "HRI") return ImageKind::kHri;
  if (text == "PA") return ImageKind::kPa;
  if (text == "ENVELOPE") return ImageKind::kEnvelope;
  if (text == "DB") return ImageKind::kDb;
  throw ValidationError("unknown image kind '" + std::string(text) + "'");
}

void Image::validate() const {
  grid.validate();
  if (values.size() != grid.pixel_count())
    throw ValidationError("image: value count does not match grid");
  for (double v : values)
    if (!std::isfinite(v)) throw ValidationError("image: non-finite value");
}

}  // namespace stabeam
