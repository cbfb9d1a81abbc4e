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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabeam/acoustic_sim.hpp"
#include "stabeam/array_model.hpp"
#include "stabeam/beamform.hpp"
#include "stabeam/image.hpp"
#include "stabeam/metrics.hpp"

namespace stabeam {

inline constexpr int kConfigSchemaVersion = 1;

struct MstaParams {
  std::size_t subaperture_size = 4;
  std::size_t stride = 0;                      // 0: resolved to subaperture_size
  std::optional<double> virtual_source_depth;  // unset: default_virtual_source_depth
};

struct PaParams {
  double focus_depth = 25.0e-3;
  ScanGeometry scan = ScanGeometry::kLinear;
  std::size_t num_scanlines = 121;
  // Unset: num_scanlines lines spread over the grid width (linear) or over
  // +/- sector_half_angle (sector).
  std::optional<std::vector<double>> scanlines;
  double sector_half_angle = 0.5;  // rad
};

struct SimulationParams {
  std::size_t num_samples = 4096;
  double noise_std = 0.0;
  std::uint64_t seed = 1;
  double fractional_bandwidth = 0.6;
};

struct ImagingParams {
  ImageGrid grid;
  Apodization apodization = Apodization::kRectangular;
  double dynamic_range = 60.0;
};

struct MetricsParams {
  RegionSpec signal{-0.25e-3, 0.25e-3, 24.9e-3, 25.1e-3, RegionRole::kSignal};
  RegionSpec noise{-4.0e-3, 4.0e-3, 27.5e-3, 30.0e-3, RegionRole::kNoise};
  std::optional<Vec2> peak_hint;  // unset: center of the signal region
  std::uint64_t bytes_per_sample = 2;

  Vec2 hint() const {
    return peak_hint.value_or(
        Vec2{0.5 * (signal.x_min + signal.x_max), 0.5 * (signal.z_min + signal.z_max)});
  }
};

/// Everything a run needs. Defaults describe the stock 8-element setup with a
/// point target at (0, 25 mm).
struct RunConfig {
  int schema = kConfigSchemaVersion;
  ArrayGeometry geometry;
  SequenceMode mode = SequenceMode::kSta;
  MstaParams msta;
  PaParams pa;
  Phantom phantom{{Scatterer{0.0, 25.0e-3, 1.0}}};
  SimulationParams simulation;
  ImagingParams imaging;
  MetricsParams metrics;
  std::string out_dir = "out";

  PulseModel pulse() const { return {geometry.center_frequency, simulation.fractional_bandwidth}; }

  /// Cross-module invariants; throws ValidationError naming the field.
  void validate() const;
};

/// Parses JSON text. `origin` names the source in error messages. Errors are
/// ValidationError with "origin:line: field: message".
RunConfig parse_config(std::string_view json_text, std::string_view origin = "<config>");

/// Reads and parses a config file. Relative phantom.file paths resolve
/// against the config file's directory. Unreadable files throw IoError.
RunConfig load_config(const std::filesystem::path& path);

/// Effective configuration (all defaults and derived values resolved, the
/// phantom inlined) as pretty JSON. Parsing it back yields the same run.
std::string effective_config_json(const RunConfig& config);

/// Transmit sequence for `mode` with all config defaults resolved.
TransmitSequence build_sequence(const RunConfig& config, SequenceMode mode);

/// Resolve the optional fields of MstaParams/PaParams in place.
RunConfig resolved(const RunConfig& config);

}  // namespace stabeam
