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

#include "stabeam/pipeline.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

#include "stabeam/beamform.hpp"
#include "stabeam/errors.hpp"
#include "stabeam/postproc.hpp"

namespace stabeam {

namespace fs = std::filesystem;

std::string method_name(SequenceMode mode) {
  switch (mode) {
    case SequenceMode::kSta: return "sta";
    case SequenceMode::kMsta: return "msta";
    case SequenceMode::kPa: return "pa";
  }
  return "unknown";
}

RfDataSet simulate_for(const RunConfig& config, SequenceMode mode, std::size_t threads) {
  const TransmitSequence seq = build_sequence(config, mode);
  return simulate_rf(config.phantom, config.geometry, seq, config.pulse(),
                     config.simulation.num_samples, config.simulation.noise_std,
                     config.simulation.seed, threads);
}

BeamformProducts beamform_dataset(const RfDataSet& rf, const RunConfig& config, bool keep_lris,
                                  std::size_t threads) {
  const ImageGrid& grid = config.imaging.grid;
  const Apodization apod = config.imaging.apodization;
  BeamformProducts out;
  if (rf.sequence.mode == SequenceMode::kPa) {
    if (keep_lris) throw ValidationError("LRI undefined for PA mode");
    out.image = beamform_pa(rf, grid, apod, threads);
  } else {
    auto lris = beamform_all_lris(rf, grid, apod, threads);
    out.image = synthesize_hri(lris);
    if (keep_lris) out.lris = std::move(lris);
  }
  out.envelope = envelope(out.image, threads);
  out.db = log_compress(out.envelope, config.imaging.dynamic_range);
  return out;
}

namespace {

std::string real_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t count_value(const ImageFile& file, std::string_view key) {
  const auto text = file.find(key);
  if (!text) throw ValidationError("image metadata lacks '" + std::string(key) + "'");
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc() || ptr != text->data() + text->size())
    throw ValidationError("image metadata '" + std::string(key) + "' is not an integer");
  return v;
}

double real_value(const ImageFile& file, std::string_view key) {
  const auto text = file.find(key);
  if (!text) throw ValidationError("image metadata lacks '" + std::string(key) + "'");
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc() || ptr != text->data() + text->size())
    throw ValidationError("image metadata '" + std::string(key) + "' is not a number");
  return v;
}

fs::path prepare_out_dir(const RunConfig& config, const CommandOptions& options) {
  const fs::path dir = options.out_dir.empty() ? fs::path(config.out_dir) : options.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  return dir;
}

void write_manifest(const fs::path& dir, const RunConfig& config,
                    std::vector<fs::path>& written) {
  const fs::path p = dir / "manifest.json";
  write_file(p, effective_config_json(config));
  written.push_back(p);
}

void write_products(const fs::path& dir, const std::string& method, const RfDataSet& rf,
                    const BeamformProducts& products, const RunConfig& config,
                    std::vector<fs::path>& written) {
  const Metadata meta = image_metadata(rf, config.metrics.bytes_per_sample);
  auto put = [&](const fs::path& p, const std::string& bytes) {
    write_file(p, bytes);
    written.push_back(p);
  };
  for (std::size_t k = 0; k < products.lris.size(); ++k)
    put(dir / (method + "_lri_" + std::to_string(k) + ".staim"), encode_image(products.lris[k], meta));
  put(dir / (method + "_beamformed.staim"), encode_image(products.image, meta));
  put(dir / (method + "_envelope.staim"), encode_image(products.envelope, meta));
  put(dir / (method + "_db.staim"), encode_image(products.db, meta));
  put(dir / (method + ".pgm"), encode_pgm(products.db, config.imaging.dynamic_range));
}

void check_rf_matches(const RfDataSet& rf, const RunConfig& config) {
  if (!(rf.geometry == config.geometry))
    throw ValidationError("RF header geometry does not match the config geometry");
  if (rf.sequence.mode != config.mode)
    throw ValidationError("mode mismatch: RF file is " + std::string(to_string(rf.sequence.mode)) +
                          ", config mode is " + std::string(to_string(config.mode)));
}

}  // namespace

Metadata image_metadata(const RfDataSet& rf, std::uint64_t bytes_per_sample) {
  return {
      {"method", method_name(rf.sequence.mode)},
      {"emissions", std::to_string(rf.num_emissions())},
      {"channels", std::to_string(rf.num_channels())},
      {"samples_per_emission", std::to_string(rf.num_samples)},
      {"bytes_per_sample", std::to_string(bytes_per_sample)},
      {"num_elements", std::to_string(rf.geometry.num_elements)},
      {"pitch", real_text(rf.geometry.pitch)},
      {"center_frequency", real_text(rf.geometry.center_frequency)},
      {"sampling_frequency", real_text(rf.geometry.sampling_frequency)},
      {"sound_speed", real_text(rf.geometry.sound_speed)},
  };
}

MethodRun method_run_from_file(const ImageFile& file, const std::string& fallback_method) {
  MethodRun run;
  run.method = file.find("method").value_or(fallback_method);
  run.envelope = file.image;
  run.transfer = {count_value(file, "emissions"), count_value(file, "channels"),
                  count_value(file, "samples_per_emission"), count_value(file, "bytes_per_sample")};
  run.geometry.num_elements = count_value(file, "num_elements");
  run.geometry.pitch = real_value(file, "pitch");
  run.geometry.center_frequency = real_value(file, "center_frequency");
  run.geometry.sampling_frequency = real_value(file, "sampling_frequency");
  run.geometry.sound_speed = real_value(file, "sound_speed");
  return run;
}

Image as_stored(const Image& image) {
  Image out = image;
  for (double& v : out.values) v = static_cast<double>(static_cast<float>(v));
  return out;
}

std::vector<fs::path> cmd_simulate(const RunConfig& config, const CommandOptions& options,
                                   std::ostream& log) {
  const fs::path dir = prepare_out_dir(config, options);
  const RfDataSet rf = simulate_for(config, config.mode, options.threads);
  const std::string bytes = encode_rf(rf);
  std::vector<fs::path> written;
  const fs::path p = dir / (method_name(config.mode) + ".starf");
  write_file(p, bytes);
  written.push_back(p);
  write_manifest(dir, config, written);
  log << "emissions=" << rf.num_emissions() << " channels=" << rf.num_channels()
      << " samples=" << rf.num_samples << " bytes_written=" << bytes.size() << " file=" << p.string()
      << '\n';
  return written;
}

std::vector<fs::path> cmd_beamform(const RunConfig& config, const fs::path& rf_path,
                                   const CommandOptions& options, std::ostream& log) {
  const RfDataSet rf = read_rf(rf_path);
  check_rf_matches(rf, config);
  const fs::path dir = prepare_out_dir(config, options);
  const BeamformProducts products = beamform_dataset(rf, config, options.emit_lri, options.threads);
  std::vector<fs::path> written;
  write_products(dir, method_name(rf.sequence.mode), rf, products, config, written);
  write_manifest(dir, config, written);
  log << "mode=" << to_string(rf.sequence.mode) << " lris=" << products.lris.size()
      << " images_written=" << written.size() - 1 << '\n';
  return written;
}

std::vector<ReportRow> cmd_metrics(const RunConfig& config,
                                   std::span<const fs::path> envelope_images,
                                   const CommandOptions& options, std::ostream& log) {
  if (envelope_images.empty()) throw ValidationError("metrics: no image files given");
  std::vector<MethodRun> runs;
  for (const fs::path& p : envelope_images) {
    const ImageFile file = read_image(p);
    if (file.image.kind != ImageKind::kEnvelope)
      throw ValidationError("metrics: '" + p.string() + "' is not an ENVELOPE image");
    runs.push_back(method_run_from_file(file, p.stem().string()));
  }
  const auto rows = snr_gain_report(runs, config.metrics.signal, config.metrics.noise,
                                    config.metrics.hint());
  const fs::path dir = prepare_out_dir(config, options);
  std::vector<fs::path> written;
  write_file(dir / "metrics.csv", report_csv(rows));
  write_manifest(dir, config, written);
  log << report_table(rows);
  return rows;
}

std::vector<ReportRow> cmd_compare(const RunConfig& config, const CommandOptions& options,
                                   std::ostream& log) {
  const fs::path dir = prepare_out_dir(config, options);
  std::vector<fs::path> written;
  std::vector<MethodRun> runs;
  for (SequenceMode mode : {SequenceMode::kSta, SequenceMode::kMsta, SequenceMode::kPa}) {
    RunConfig cfg = config;
    cfg.mode = mode;
    const std::string method = method_name(mode);
    const RfDataSet rf = simulate_for(cfg, mode, options.threads);
    write_file(dir / (method + ".starf"), encode_rf(rf));
    written.push_back(dir / (method + ".starf"));
    const bool keep_lris = options.emit_lri && mode != SequenceMode::kPa;
    const BeamformProducts products = beamform_dataset(rf, cfg, keep_lris, options.threads);
    write_products(dir, method, rf, products, cfg, written);
    runs.push_back({method, rf.geometry, as_stored(products.envelope),
                    {rf.num_emissions(), rf.num_channels(), rf.num_samples,
                     config.metrics.bytes_per_sample}});
  }
  const auto rows = snr_gain_report(runs, config.metrics.signal, config.metrics.noise,
                                    config.metrics.hint());
  write_file(dir / "compare.csv", report_csv(rows));
  write_manifest(dir, config, written);
  log << report_table(rows);
  return rows;
}

}  // namespace stabeam
