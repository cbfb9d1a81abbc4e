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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stabeam/acoustic_sim.hpp"
#include "stabeam/config.hpp"
#include "stabeam/file_formats.hpp"
#include "stabeam/image.hpp"
#include "stabeam/metrics.hpp"

namespace stabeam {

/// "sta", "msta" or "pa"; also the file-name prefix of a method's outputs.
std::string method_name(SequenceMode mode);

struct CommandOptions {
  std::filesystem::path out_dir;  // empty: config.out_dir
  std::size_t threads = 1;
  bool emit_lri = false;
};

/// Simulated RF for `mode` using the config's phantom, pulse and noise.
RfDataSet simulate_for(const RunConfig& config, SequenceMode mode, std::size_t threads = 1);

struct BeamformProducts {
  std::vector<Image> lris;  // filled only when requested (STA/MSTA)
  Image image;              // HRI or PA
  Image envelope;
  Image db;
};

/// HRI (STA/MSTA) or line image (PA) plus envelope and dB images.
BeamformProducts beamform_dataset(const RfDataSet& rf, const RunConfig& config, bool keep_lris,
                                  std::size_t threads = 1);

/// Header metadata written alongside every image: method, mode, transfer
/// model factors and array geometry.
Metadata image_metadata(const RfDataSet& rf, std::uint64_t bytes_per_sample);

/// Geometry and transfer model recovered from image_metadata().
MethodRun method_run_from_file(const ImageFile& file, const std::string& fallback_method);

/// Image values rounded to float32, i.e. what a STAIM1 file holds.
Image as_stored(const Image& image);

// Command implementations. Each writes manifest.json (the effective config) to
// the output directory and returns the paths it wrote, in write order.
std::vector<std::filesystem::path> cmd_simulate(const RunConfig& config,
                                                const CommandOptions& options, std::ostream& log);
std::vector<std::filesystem::path> cmd_beamform(const RunConfig& config,
                                                const std::filesystem::path& rf_path,
                                                const CommandOptions& options, std::ostream& log);
std::vector<ReportRow> cmd_metrics(const RunConfig& config,
                                   std::span<const std::filesystem::path> envelope_images,
                                   const CommandOptions& options, std::ostream& log);
std::vector<ReportRow> cmd_compare(const RunConfig& config, const CommandOptions& options,
                                   std::ostream& log);

}  // namespace stabeam
