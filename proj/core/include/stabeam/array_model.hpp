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

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace stabeam {

/// Point in the imaging plane. x is lateral, z is depth (positive into the
/// medium); the array sits on z = 0.
struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.z - b.z); }

/// Linear transducer. Element i sits at x_i = (i - (N-1)/2) * pitch, z = 0.
struct ArrayGeometry {
  std::size_t num_elements = 8;
  double pitch = 0.3e-3;                // m
  double center_frequency = 5.0e6;      // Hz
  double sampling_frequency = 40.0e6;   // Hz
  double sound_speed = 1540.0;          // m/s

  /// Throws ValidationError on any violated invariant, including
  /// sampling_frequency < 4 * center_frequency.
  void validate() const;

  double element_x(std::size_t index) const {
    return (static_cast<double>(index) - 0.5 * static_cast<double>(num_elements - 1)) * pitch;
  }
  Vec2 element_position(std::size_t index) const { return {element_x(index), 0.0}; }

  friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;
};

std::vector<Vec2> element_positions(const ArrayGeometry& geometry);

enum class EventLabel { kStaSingle, kMstaSubaperture, kPaFocused };
enum class SequenceMode { kSta, kMsta, kPa };
/// PA scan-line layout: parallel vertical lines, or steered lines from the
/// array center.
enum class ScanGeometry { kLinear, kSector };

std::string_view to_string(EventLabel label);
std::string_view to_string(SequenceMode mode);
std::string_view to_string(ScanGeometry scan);
EventLabel parse_event_label(std::string_view text);
SequenceMode parse_sequence_mode(std::string_view text);
ScanGeometry parse_scan_geometry(std::string_view text);

/// Diverging-wave source of a multi-element subaperture. The source sits at
/// `position` = (x_c, -depth). `normalization_offset` is the smallest raw
/// delay that was subtracted so the event delays start at zero.
struct VirtualSource {
  Vec2 position;
  double depth = 0.0;
  double normalization_offset = 0.0;

  friend bool operator==(const VirtualSource&, const VirtualSource&) = default;
};

/// Focused PA scan line: points o + s*u for s >= 0, focus at s = focus_range.
/// reference_time is the simultaneous arrival time at the focus (d_max / c).
struct FocalLine {
  Vec2 origin;
  Vec2 direction{0.0, 1.0};
  double focus_range = 0.0;
  double reference_time = 0.0;

  Vec2 point_at(double s) const { return {origin.x + s * direction.x, origin.z + s * direction.z}; }
  Vec2 focus() const { return point_at(focus_range); }

  friend bool operator==(const FocalLine&, const FocalLine&) = default;
};

struct TransmitEvent {
  std::vector<std::size_t> active_elements;
  std::vector<double> delays;        // s, one per active element, min == 0
  std::vector<double> apodization;   // [0, 1], one per active element
  EventLabel label = EventLabel::kStaSingle;
  std::optional<VirtualSource> virtual_source;  // MSTA_SUBAPERTURE only
  std::optional<FocalLine> focal_line;          // PA_FOCUSED only

  void validate(const ArrayGeometry& geometry) const;

  friend bool operator==(const TransmitEvent&, const TransmitEvent&) = default;
};

struct TransmitSequence {
  SequenceMode mode = SequenceMode::kSta;
  std::vector<TransmitEvent> events;
  // PA only: lateral line positions (linear) or steering angles in radians
  // (sector), one per event.
  ScanGeometry scan = ScanGeometry::kLinear;
  std::vector<double> scanlines;

  std::size_t size() const { return events.size(); }
  void validate(const ArrayGeometry& geometry) const;

  friend bool operator==(const TransmitSequence&, const TransmitSequence&) = default;
};

/// One event per element; event k fires element k alone with zero delay.
TransmitSequence sta_sequence(const ArrayGeometry& geometry);

/// Default virtual-source depth for a subaperture of `subaperture_size`
/// elements: 2 * half_width / tan(30 deg), half_width = size * pitch / 2.
double default_virtual_source_depth(const ArrayGeometry& geometry, std::size_t subaperture_size);

/// Contiguous windows [s, s + size) for s = 0, stride, 2*stride, ... while the
/// window fits. Each multi-element window emulates a spherical wave from a
/// virtual source `virtual_source_depth` behind its center. One-element
/// windows degenerate to plain STA events.
TransmitSequence msta_sequence(const ArrayGeometry& geometry, std::size_t subaperture_size,
                               std::size_t stride, double virtual_source_depth);

/// Focused transmit per scan line, all elements active with unit apodization.
/// For kLinear, `scanlines` are lateral positions and the focus is at
/// (x, focus_depth); for kSector they are angles from the z axis and
/// focus_depth is the range along the steered line.
TransmitSequence pa_sequence(const ArrayGeometry& geometry, double focus_depth,
                             std::span<const double> scanlines,
                             ScanGeometry scan = ScanGeometry::kLinear);

/// `count` evenly spaced positions covering [first, last] inclusive.
std::vector<double> evenly_spaced(double first, double last, std::size_t count);

}  // namespace stabeam
