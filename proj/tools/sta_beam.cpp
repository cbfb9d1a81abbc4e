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

// sta-beam: simulate | beamform | metrics | compare

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabeam/config.hpp"
#include "stabeam/errors.hpp"
#include "stabeam/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic transmit aperture ultrasound beamforming pipeline", "sta-beam"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir;
  std::size_t threads = 1;
  bool emit_lri = false;
  std::string rf_path;
  std::vector<std::string> images;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Run configuration (JSON)")->required();
    cmd->add_option("--out-dir", out_dir, "Output directory (overrides output.dir)");
    cmd->add_option("--threads", threads, "Worker threads; outputs do not depend on it")
        ->check(CLI::PositiveNumber);
  };

  auto* simulate = app.add_subcommand("simulate", "Simulate RF data (writes <mode>.starf)");
  add_common(simulate);

  auto* beamform = app.add_subcommand("beamform", "Beamform an RF file into images");
  add_common(beamform);
  beamform->add_flag("--emit-lri", emit_lri, "Also write every low-resolution image");
  beamform->add_option("--rf", rf_path, "STARF1 input (default <out-dir>/<mode>.starf)");

  auto* metrics = app.add_subcommand("metrics", "SNR / FWHM / side-lobe / transfer report");
  add_common(metrics);
  metrics->add_option("--image", images, "ENVELOPE image file(s)")->required();

  auto* compare = app.add_subcommand("compare", "STA, MSTA and PA end to end on one phantom");
  add_common(compare);
  compare->add_flag("--emit-lri", emit_lri, "Also write every low-resolution image");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every usage error is a validation error
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    const stabeam::RunConfig config = stabeam::load_config(config_path);
    stabeam::CommandOptions options;
    options.out_dir = out_dir;
    options.threads = threads;
    options.emit_lri = emit_lri;
    const std::filesystem::path dir = out_dir.empty() ? config.out_dir : out_dir;

    if (simulate->parsed()) {
      stabeam::cmd_simulate(config, options, std::cout);
    } else if (beamform->parsed()) {
      const std::filesystem::path rf =
          rf_path.empty() ? dir / (stabeam::method_name(config.mode) + ".starf")
                          : std::filesystem::path(rf_path);
      stabeam::cmd_beamform(config, rf, options, std::cout);
    } else if (metrics->parsed()) {
      const std::vector<std::filesystem::path> paths(images.begin(), images.end());
      stabeam::cmd_metrics(config, paths, options, std::cout);
    } else if (compare->parsed()) {
      stabeam::cmd_compare(config, options, std::cout);
    }
  } catch (const stabeam::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const stabeam::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
