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

#include "stabeam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "stabeam/errors.hpp"

namespace stabeam {

bool RegionSpec::overlaps(const RegionSpec& other) const {
  return x_min <= other.x_max && other.x_min <= x_max && z_min <= other.z_max &&
         other.z_min <= z_max;
}

std::vector<std::size_t> RegionSpec::pixels(const ImageGrid& grid) const {
  std::vector<std::size_t> out;
  for (std::size_t iz = 0; iz < grid.nz; ++iz) {
    const double z = grid.z_at(iz);
    if (z < z_min || z > z_max) continue;
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const double x = grid.x_at(ix);
      if (x >= x_min && x <= x_max) out.push_back(iz * grid.nx + ix);
    }
  }
  if (out.empty())
    throw ValidationError(std::string(role == RegionRole::kSignal ? "signal" : "noise") +
                          " region does not cover any pixel of the grid");
  return out;
}

std::string format_measurement(const Measurement& m) {
  switch (m.status) {
    case Measurement::Status::kInfinite: return "inf";
    case Measurement::Status::kUnresolved: return "unresolved";
    case Measurement::Status::kNoneDetected: return "none";
    case Measurement::Status::kOk: break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", m.value);
  return buf;
}

Measurement metric_snr(const Image& envelope, const RegionSpec& signal, const RegionSpec& noise) {
  if (signal.overlaps(noise)) throw ValidationError("signal and noise regions overlap");
  const auto sig = signal.pixels(envelope.grid);
  const auto noi = noise.pixels(envelope.grid);

  double power = 0.0;
  for (std::size_t i : sig) power += envelope.values[i] * envelope.values[i];
  const double rms = std::sqrt(power / static_cast<double>(sig.size()));

  double mean = 0.0;
  for (std::size_t i : noi) mean += envelope.values[i];
  mean /= static_cast<double>(noi.size());
  double var = 0.0;
  for (std::size_t i : noi) var += (envelope.values[i] - mean) * (envelope.values[i] - mean);
  const double std_dev = std::sqrt(var / static_cast<double>(noi.size()));

  if (!(std_dev > 0.0)) return Measurement::infinite();
  return Measurement::of(20.0 * std::log10(rms / std_dev));
}

PixelIndex locate_peak(const Image& image, Vec2 hint, std::size_t radius) {
  const ImageGrid& g = image.grid;
  auto nearest = [](double v, double lo, double step, std::size_t n) {
    const double idx = std::floor((v - lo) / step);
    return static_cast<std::size_t>(std::clamp(idx, 0.0, static_cast<double>(n - 1)));
  };
  const std::size_t cz = nearest(hint.z, g.z_min, g.dz(), g.nz);
  const std::size_t cx = nearest(hint.x, g.x_min, g.dx(), g.nx);
  const std::size_t z0 = cz > radius ? cz - radius : 0;
  const std::size_t x0 = cx > radius ? cx - radius : 0;
  const std::size_t z1 = std::min(g.nz - 1, cz + radius);
  const std::size_t x1 = std::min(g.nx - 1, cx + radius);
  PixelIndex best{z0, x0};
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t iz = z0; iz <= z1; ++iz)
    for (std::size_t ix = x0; ix <= x1; ++ix)
      if (image.at(iz, ix) > best_value) {
        best_value = image.at(iz, ix);
        best = {iz, ix};
      }
  return best;
}

Measurement profile_fwhm(std::span<const double> profile, double spacing, std::size_t peak) {
  if (peak >= profile.size()) throw ValidationError("profile_fwhm: peak index out of range");
  const double half = 0.5 * profile[peak];
  if (!(half > 0.0)) return Measurement::unresolved();

  std::size_t left = peak;
  while (left > 0 && profile[left - 1] >= half) --left;
  if (left == 0) return Measurement::unresolved();
  std::size_t right = peak;
  while (right + 1 < profile.size() && profile[right + 1] >= half) ++right;
  if (right + 1 == profile.size()) return Measurement::unresolved();

  // Crossing between (left - 1, left) and between (right, right + 1).
  const double fl = (half - profile[left - 1]) / (profile[left] - profile[left - 1]);
  const double fr = (profile[right] - half) / (profile[right] - profile[right + 1]);
  const double x_left = static_cast<double>(left - 1) + fl;
  const double x_right = static_cast<double>(right) + fr;
  return Measurement::of((x_right - x_left) * spacing);
}

Measurement profile_sidelobe(std::span<const double> profile, std::size_t peak) {
  if (peak >= profile.size()) throw ValidationError("profile_sidelobe: peak index out of range");
  const double main = profile[peak];
  if (!(main > 0.0)) return Measurement::none_detected();

  // Leave the -6 dB core first so ripple on the lobe top is not taken for a
  // flanking minimum, then descend to the first local minimum on each side.
  const double half = 0.5 * main;
  std::size_t left = peak;
  while (left > 0 && profile[left] >= half) --left;
  while (left > 0 && profile[left - 1] <= profile[left]) --left;
  std::size_t right = peak;
  while (right + 1 < profile.size() && profile[right] >= half) ++right;
  while (right + 1 < profile.size() && profile[right + 1] <= profile[right]) ++right;

  double best = -1.0;
  auto consider = [&](std::size_t i) {
    const bool rises = i > 0 && profile[i] > profile[i - 1];
    const bool falls = i + 1 < profile.size() && profile[i] >= profile[i + 1];
    if (rises && falls) best = std::max(best, profile[i]);
  };
  for (std::size_t i = 1; i < left; ++i) consider(i);
  for (std::size_t i = right + 1; i + 1 < profile.size(); ++i) consider(i);
  if (!(best > 0.0)) return Measurement::none_detected();
  return Measurement::of(20.0 * std::log10(best / main));
}

namespace {

std::vector<double> lateral_profile(const Image& image, std::size_t iz) {
  std::vector<double> row(image.grid.nx);
  for (std::size_t ix = 0; ix < row.size(); ++ix) row[ix] = image.at(iz, ix);
  return row;
}

}  // namespace

Measurement metric_fwhm(const Image& envelope, Vec2 hint) {
  const PixelIndex peak = locate_peak(envelope, hint);
  const auto row = lateral_profile(envelope, peak.iz);
  return profile_fwhm(row, envelope.grid.dx(), peak.ix);
}

Measurement metric_sidelobe(const Image& envelope, Vec2 hint) {
  const PixelIndex peak = locate_peak(envelope, hint);
  const auto row = lateral_profile(envelope, peak.iz);
  return profile_sidelobe(row, peak.ix);
}

std::uint64_t data_transfer_bytes(const TransferModel& model) {
  const std::uint64_t factors[] = {model.emissions, model.channels, model.samples_per_emission,
                                   model.bytes_per_sample};
  std::uint64_t product = 1;
  for (std::uint64_t f : factors) {
    if (f == 0) throw ValidationError("transfer model: all factors must be positive");
    if (product > std::numeric_limits<std::uint64_t>::max() / f)
      throw ValidationError("transfer model: byte count overflows 64 bits");
    product *= f;
  }
  return product;
}

std::vector<ReportRow> snr_gain_report(std::span<const MethodRun> runs, const RegionSpec& signal,
                                       const RegionSpec& noise, Vec2 peak_hint) {
  std::vector<ReportRow> rows;
  for (const MethodRun& run : runs) {
    if (!(run.geometry == runs.front().geometry))
      throw ValidationError("report: run '" + run.method + "' uses a different array geometry");
    if (run.envelope.kind != ImageKind::kEnvelope)
      throw ValidationError("report: run '" + run.method + "' is not an envelope image");
    rows.push_back({run.method, metric_snr(run.envelope, signal, noise),
                    metric_fwhm(run.envelope, peak_hint), metric_sidelobe(run.envelope, peak_hint),
                    data_transfer_bytes(run.transfer)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.method < b.method; });
  return rows;
}

std::string report_csv(std::span<const ReportRow> rows) {
  std::ostringstream out;
  out << kReportHeader << '\n';
  for (const auto& r : rows)
    out << r.method << ',' << format_measurement(r.snr_db) << ',' << format_measurement(r.fwhm_m)
        << ',' << format_measurement(r.sidelobe_db) << ',' << r.bytes_per_frame << '\n';
  return out.str();
}

std::string report_table(std::span<const ReportRow> rows) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %12s %14s %14s %16s\n", "method", "snr_db", "fwhm_mm",
                "sidelobe_db", "bytes_per_frame");
  out << line;
  for (const auto& r : rows) {
    Measurement fwhm_mm = r.fwhm_m;
    if (fwhm_mm.ok()) fwhm_mm.value *= 1e3;
    auto cell = [](const Measurement& m) {
      if (!m.ok()) return format_measurement(m);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", m.value);
      return std::string(buf);
    };
    std::snprintf(line, sizeof line, "%-8s %12s %14s %14s %16llu\n", r.method.c_str(),
                  cell(r.snr_db).c_str(), cell(fwhm_mm).c_str(), cell(r.sidelobe_db).c_str(),
                  static_cast<unsigned long long>(r.bytes_per_frame));
    out << line;
  }
  return out.str();
}

}  // namespace stabeam
