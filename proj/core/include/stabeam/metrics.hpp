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
#include <string>
#include <vector>

#include "stabeam/array_model.hpp"
#include "stabeam/image.hpp"

namespace stabeam {

enum class RegionRole { kSignal, kNoise };

/// Axis-aligned box in meters; a pixel belongs to it when its center lies
/// inside the closed ranges.
struct RegionSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  double z_min = 0.0;
  double z_max = 0.0;
  RegionRole role = RegionRole::kSignal;

  bool overlaps(const RegionSpec& other) const;
  /// Flat [z][x] pixel indices inside the region. Throws if empty.
  std::vector<std::size_t> pixels(const ImageGrid& grid) const;
};

/// Outcome of a measurement that may have no numeric value.
struct Measurement {
  enum class Status { kOk, kInfinite, kUnresolved, kNoneDetected };
  Status status = Status::kOk;
  double value = 0.0;

  bool ok() const { return status == Status::kOk; }
  static Measurement of(double v) { return {Status::kOk, v}; }
  static Measurement infinite() { return {Status::kInfinite, 0.0}; }
  static Measurement unresolved() { return {Status::kUnresolved, 0.0}; }
  static Measurement none_detected() { return {Status::kNoneDetected, 0.0}; }
};

/// CSV token: the number (%.9g), "inf", "unresolved" or "none".
std::string format_measurement(const Measurement& m);

/// 20 log10(rms(signal) / std(noise)). Zero noise std yields kInfinite.
/// Throws ValidationError if either region is empty on the grid or they overlap.
Measurement metric_snr(const Image& envelope, const RegionSpec& signal, const RegionSpec& noise);

/// Pixel of the largest value inside a (2*radius+1)^2 window around the hint.
struct PixelIndex {
  std::size_t iz = 0;
  std::size_t ix = 0;
};
PixelIndex locate_peak(const Image& image, Vec2 hint, std::size_t radius = 5);

/// Full width at half maximum of a 1-D profile around index `peak`, with
/// linear interpolation of both crossings. kUnresolved if either side never
/// drops below half the peak.
Measurement profile_fwhm(std::span<const double> profile, double spacing, std::size_t peak);

/// Highest local maximum outside the main lobe, in dB relative to the peak.
/// The main lobe ends at the first local minimum past the half-maximum point
/// on either side of `peak`.
Measurement profile_sidelobe(std::span<const double> profile, std::size_t peak);

/// Lateral -6 dB width through the peak nearest the hint.
Measurement metric_fwhm(const Image& envelope, Vec2 hint);
/// Peak side-lobe level of the lateral profile through the peak nearest the hint.
Measurement metric_sidelobe(const Image& envelope, Vec2 hint);

struct TransferModel {
  std::uint64_t emissions = 0;
  std::uint64_t channels = 0;
  std::uint64_t samples_per_emission = 0;
  std::uint64_t bytes_per_sample = 0;
};

/// emissions * channels * samples_per_emission * bytes_per_sample. Throws on
/// zero factors or 64-bit overflow.
std::uint64_t data_transfer_bytes(const TransferModel& model);

/// One method's output prepared for the comparison table.
struct MethodRun {
  std::string method;
  ArrayGeometry geometry;
  Image envelope;
  TransferModel transfer;
};

struct ReportRow {
  std::string method;
  Measurement snr_db;
  Measurement fwhm_m;
  Measurement sidelobe_db;
  std::uint64_t bytes_per_frame = 0;

  friend bool operator==(const ReportRow& a, const ReportRow& b) {
    auto same = [](const Measurement& x, const Measurement& y) {
      return x.status == y.status && x.value == y.value;
    };
    return a.method == b.method && same(a.snr_db, b.snr_db) && same(a.fwhm_m, b.fwhm_m) &&
           same(a.sidelobe_db, b.sidelobe_db) && a.bytes_per_frame == b.bytes_per_frame;
  }
};

/// One row per run, sorted by method name. All runs must share a geometry.
std::vector<ReportRow> snr_gain_report(std::span<const MethodRun> runs, const RegionSpec& signal,
                                       const RegionSpec& noise, Vec2 peak_hint);

inline constexpr const char* kReportHeader = "method,snr_db,fwhm_m,sidelobe_db,bytes_per_frame";

std::string report_csv(std::span<const ReportRow> rows);
std::string report_table(std::span<const ReportRow> rows);

}  // namespace stabeam
