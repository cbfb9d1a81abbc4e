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

#include "stabeam/array_model.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "stabeam/errors.hpp"

namespace stabeam {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void ArrayGeometry::validate() const {
  if (num_elements < 1) throw ValidationError("geometry: num_elements must be >= 1");
  if (!positive_finite(pitch)) throw ValidationError("geometry: pitch must be > 0");
  if (!positive_finite(center_frequency))
    throw ValidationError("geometry: center_frequency must be > 0");
  if (!positive_finite(sampling_frequency))
    throw ValidationError("geometry: sampling_frequency must be > 0");
  if (!positive_finite(sound_speed)) throw ValidationError("geometry: sound_speed must be > 0");
  if (sampling_frequency < 4.0 * center_frequency)
    throw ValidationError("geometry: sampling_frequency must be >= 4 * center_frequency");
}

std::vector<Vec2> element_positions(const ArrayGeometry& geometry) {
  std::vector<Vec2> positions(geometry.num_elements);
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = geometry.element_position(i);
  return positions;
}

std::string_view to_string(EventLabel label) {
  switch (label) {
    case EventLabel::kStaSingle: return "STA_SINGLE";
    case EventLabel::kMstaSubaperture: return "MSTA_SUBAPERTURE";
    case EventLabel::kPaFocused: return "PA_FOCUSED";
  }
  return "?";
}

std::string_view to_string(SequenceMode mode) {
  switch (mode) {
    case SequenceMode::kSta: return "STA";
    case SequenceMode::kMsta: return "MSTA";
    case SequenceMode::kPa: return "PA";
  }
  return "?";
}

std::string_view to_string(ScanGeometry scan) {
  return scan == ScanGeometry::kLinear ? "linear" : "sector";
}

EventLabel parse_event_label(std::string_view text) {
  if (text == "STA_SINGLE") return EventLabel::kStaSingle;
  if (text == "MSTA_SUBAPERTURE") return EventLabel::kMstaSubaperture;
  if (text == "PA_FOCUSED") return EventLabel::kPaFocused;
  throw ValidationError("unknown event label '" + std::string(text) + "'");
}

SequenceMode parse_sequence_mode(std::string_view text) {
  if (text == "STA" || text == "sta") return SequenceMode::kSta;
  if (text == "MSTA" || text == "msta") return SequenceMode::kMsta;
  if (text == "PA" || text == "pa") return SequenceMode::kPa;
  throw ValidationError("unknown mode '" + std::string(text) + "' (expected sta, msta or pa)");
}

ScanGeometry parse_scan_geometry(std::string_view text) {
  if (text == "linear") return ScanGeometry::kLinear;
  if (text == "sector") return ScanGeometry::kSector;
  throw ValidationError("unknown scan geometry '" + std::string(text) +
                        "' (expected linear or sector)");
}

void TransmitEvent::validate(const ArrayGeometry& geometry) const {
  if (active_elements.empty()) throw ValidationError("transmit event: no active elements");
  if (delays.size() != active_elements.size() || apodization.size() != active_elements.size())
    throw ValidationError("transmit event: element, delay and apodization counts differ");
  std::vector<std::size_t> sorted = active_elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("transmit event: duplicate element index");
  if (sorted.back() >= geometry.num_elements)
    throw ValidationError("transmit event: element index out of range");
  for (double d : delays)
    if (!std::isfinite(d) || d < 0.0) throw ValidationError("transmit event: negative delay");
  if (*std::min_element(delays.begin(), delays.end()) != 0.0)
    throw ValidationError("transmit event: delays are not normalized to zero");
  for (double a : apodization)
    if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("transmit event: apodization outside [0, 1]");
  if (label == EventLabel::kMstaSubaperture && !virtual_source)
    throw ValidationError("transmit event: MSTA subaperture without virtual source");
  if (label == EventLabel::kPaFocused && !focal_line)
    throw ValidationError("transmit event: PA event without focal line");
}

void TransmitSequence::validate(const ArrayGeometry& geometry) const {
  if (events.empty()) throw ValidationError("transmit sequence: no events");
  for (const auto& e : events) e.validate(geometry);
  switch (mode) {
    case SequenceMode::kSta:
      if (events.size() != geometry.num_elements)
        throw ValidationError("STA sequence: event count must equal num_elements");
      for (std::size_t k = 0; k < events.size(); ++k)
        if (events[k].active_elements.size() != 1 || events[k].active_elements[0] != k)
          throw ValidationError("STA sequence: event k must fire element k only");
      break;
    case SequenceMode::kMsta:
      for (const auto& e : events)
        for (std::size_t i = 1; i < e.active_elements.size(); ++i)
          if (e.active_elements[i] != e.active_elements[i - 1] + 1)
            throw ValidationError("MSTA sequence: subaperture is not contiguous");
      break;
    case SequenceMode::kPa:
      if (scanlines.size() != events.size())
        throw ValidationError("PA sequence: event count must equal scan line count");
      for (const auto& e : events)
        if (e.label != EventLabel::kPaFocused)
          throw ValidationError("PA sequence: events must be PA_FOCUSED");
      break;
  }
}

TransmitSequence sta_sequence(const ArrayGeometry& geometry) {
  geometry.validate();
  TransmitSequence seq;
  seq.mode = SequenceMode::kSta;
  seq.events.reserve(geometry.num_elements);
  for (std::size_t k = 0; k < geometry.num_elements; ++k) {
    TransmitEvent event;
    event.active_elements = {k};
    event.delays = {0.0};
    event.apodization = {1.0};
    event.label = EventLabel::kStaSingle;
    seq.events.push_back(std::move(event));
  }
  return seq;
}

double default_virtual_source_depth(const ArrayGeometry& geometry, std::size_t subaperture_size) {
  const double half_width = 0.5 * static_cast<double>(subaperture_size) * geometry.pitch;
  return 2.0 * half_width / std::tan(std::numbers::pi / 6.0);
}

TransmitSequence msta_sequence(const ArrayGeometry& geometry, std::size_t subaperture_size,
                               std::size_t stride, double virtual_source_depth) {
  geometry.validate();
  if (subaperture_size < 1 || subaperture_size > geometry.num_elements)
    throw ValidationError("msta: subaperture_size must be in [1, num_elements]");
  if (stride < 1) throw ValidationError("msta: stride must be >= 1");
  if (!positive_finite(virtual_source_depth))
    throw ValidationError("msta: virtual_source_depth must be > 0");

  TransmitSequence seq;
  seq.mode = SequenceMode::kMsta;
  const double c = geometry.sound_speed;
  for (std::size_t start = 0; start + subaperture_size <= geometry.num_elements; start += stride) {
    TransmitEvent event;
    event.active_elements.resize(subaperture_size);
    for (std::size_t i = 0; i < subaperture_size; ++i) event.active_elements[i] = start + i;
    event.apodization.assign(subaperture_size, 1.0);
    if (subaperture_size == 1) {
      event.delays = {0.0};
      event.label = EventLabel::kStaSingle;
      seq.events.push_back(std::move(event));
      continue;
    }
    const double x_center =
        0.5 * (geometry.element_x(start) + geometry.element_x(start + subaperture_size - 1));
    const Vec2 source{x_center, -virtual_source_depth};
    event.delays.resize(subaperture_size);
    for (std::size_t i = 0; i < subaperture_size; ++i)
      event.delays[i] =
          (distance(geometry.element_position(start + i), source) - virtual_source_depth) / c;
    const double offset = *std::min_element(event.delays.begin(), event.delays.end());
    for (double& d : event.delays) d -= offset;
    event.label = EventLabel::kMstaSubaperture;
    event.virtual_source = VirtualSource{source, virtual_source_depth, offset};
    seq.events.push_back(std::move(event));
  }
  if (seq.events.empty()) throw ValidationError("msta: stride produces zero events");
  return seq;
}

TransmitSequence pa_sequence(const ArrayGeometry& geometry, double focus_depth,
                             std::span<const double> scanlines, ScanGeometry scan) {
  geometry.validate();
  if (!positive_finite(focus_depth)) throw ValidationError("pa: focus_depth must be > 0");
  if (scanlines.empty()) throw ValidationError("pa: at least one scan line is required");

  TransmitSequence seq;
  seq.mode = SequenceMode::kPa;
  seq.scan = scan;
  seq.scanlines.assign(scanlines.begin(), scanlines.end());
  const std::size_t n = geometry.num_elements;
  const double c = geometry.sound_speed;
  for (double line : scanlines) {
    if (!std::isfinite(line)) throw ValidationError("pa: scan line descriptor is not finite");
    FocalLine focal;
    if (scan == ScanGeometry::kLinear) {
      focal.origin = {line, 0.0};
      focal.direction = {0.0, 1.0};
    } else {
      if (std::abs(line) >= std::numbers::pi / 2)
        throw ValidationError("pa: steering angle must be within (-90, 90) degrees");
      focal.origin = {0.0, 0.0};
      focal.direction = {std::sin(line), std::cos(line)};
    }
    focal.focus_range = focus_depth;
    const Vec2 focus = focal.focus();

    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) dist[i] = distance(geometry.element_position(i), focus);
    const double d_max = *std::max_element(dist.begin(), dist.end());
    focal.reference_time = d_max / c;

    TransmitEvent event;
    event.label = EventLabel::kPaFocused;
    event.active_elements.resize(n);
    event.delays.resize(n);
    event.apodization.assign(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      event.active_elements[i] = i;
      event.delays[i] = (d_max - dist[i]) / c;
    }
    event.focal_line = focal;
    seq.events.push_back(std::move(event));
  }
  return seq;
}

std::vector<double> evenly_spaced(double first, double last, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = 0.5 * (first + last);
    return out;
  }
  const double step = (last - first) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + step * static_cast<double>(i);
  return out;
}

}  // namespace stabeam
