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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabeam/acoustic_sim.hpp"
#include "stabeam/image.hpp"

namespace stabeam {

// STARF1 layout:
//   "STARF1\n", then key=value lines (geometry, pulse, sequence, shape,
//   noise, seed, one block of event.<k>.* keys per emission), then "DATA\n",
//   then little-endian float32 samples in [emission][channel][sample] order.
// STAIM1 layout is the same with grid keys and float32 pixels in [z][x] order.
// Reals are written with %.17g so they read back exactly.

using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string encode_rf(const RfDataSet& rf);
/// Throws ValidationError on a malformed or inconsistent payload.
RfDataSet decode_rf(std::string_view bytes);

std::string encode_image(const Image& image, const Metadata& extra = {});

struct ImageFile {
  Image image;
  Metadata metadata;  // keys beyond the grid/kind block, in file order

  std::optional<std::string> find(std::string_view key) const;
};
ImageFile decode_image(std::string_view bytes);

/// Binary PGM (P5), 8-bit, rows ordered shallow to deep.
std::string encode_pgm(const Image& db_image, double dynamic_range);

/// Whole-file helpers; filesystem failures throw IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

inline void write_rf(const std::filesystem::path& path, const RfDataSet& rf) {
  write_file(path, encode_rf(rf));
}
inline RfDataSet read_rf(const std::filesystem::path& path) { return decode_rf(read_file(path)); }
inline void write_image(const std::filesystem::path& path, const Image& image,
                        const Metadata& extra = {}) {
  write_file(path, encode_image(image, extra));
}
inline ImageFile read_image(const std::filesystem::path& path) {
  return decode_image(read_file(path));
}
inline void write_pgm(const std::filesystem::path& path, const Image& db_image,
                      double dynamic_range) {
  write_file(path, encode_pgm(db_image, dynamic_range));
}

}  // namespace stabeam
