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

#include "stabeam/beamform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stabeam/errors.hpp"
#include "stabeam/parallel.hpp"

namespace stabeam {

DelaySplit split_delay(double t, double fs) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("split_delay: delay must be >= 0");
  return split_position(t * fs);
}

std::string_view to_string(Apodization apodization) {
  return apodization == Apodization::kRectangular ? "rect" : "hann";
}

Apodization parse_apodization(std::string_view text) {
  if (text == "rect" || text == "rectangular") return Apodization::kRectangular;
  if (text == "hann") return Apodization::kHann;
  throw ValidationError("unknown apodization '" + std::string(text) + "' (expected rect or hann)");
}

std::vector<double> receive_weights(Apodization apodization, std::size_t count) {
  std::vector<double> w(count, 1.0);
  if (apodization == Apodization::kHann) {
    for (std::size_t n = 0; n < count; ++n)
      w[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(n + 1) /
                                   static_cast<double>(count + 1)));
  }
  return w;
}

double transmit_time(const TransmitEvent& event, const ArrayGeometry& geometry, Vec2 point) {
  const double c = geometry.sound_speed;
  if (event.virtual_source) {
    const VirtualSource& v = *event.virtual_source;
    return (distance(point, v.position) - v.depth) / c - v.normalization_offset;
  }
  if (event.active_elements.size() != 1)
    throw ValidationError("transmit_time: multi-element event without a virtual source");
  return event.delays[0] + distance(point, geometry.element_position(event.active_elements[0])) / c;
}

namespace {

// Sum over receive channels for one pixel, given the transmit arrival time.
double delay_and_sum(const RfDataSet& rf, std::size_t emission, std::span<const Vec2> rx,
                     std::span<const double> weights, Vec2 point, double t_tx) {
  const double c = rf.geometry.sound_speed;
  const double fs = rf.geometry.sampling_frequency;
  double sum = 0.0;
  for (std::size_t n = 0; n < rx.size(); ++n) {
    const double t = t_tx + distance(point, rx[n]) / c;
    if (!(t >= 0.0) || t * fs >= static_cast<double>(rf.num_samples)) continue;
    sum += weights[n] * read_interpolated(rf.trace(emission, n), split_delay(t, fs));
  }
  return sum;
}

void check_shape(const RfDataSet& rf) {
  if (rf.samples.size() != rf.num_emissions() * rf.num_channels() * rf.num_samples)
    throw ValidationError("rf: sample buffer does not match its shape");
}

}  // namespace

Image beamform_lri(const RfDataSet& rf, std::size_t emission, const ImageGrid& grid,
                   Apodization apodization, std::size_t threads) {
  grid.validate();
  check_shape(rf);
  if (rf.sequence.mode == SequenceMode::kPa) throw ValidationError("LRI undefined for PA mode");
  if (emission >= rf.num_emissions())
    throw ValidationError("beamform_lri: emission index " + std::to_string(emission) +
                          " out of range (" + std::to_string(rf.num_emissions()) + " emissions)");
  const TransmitEvent& event = rf.sequence.events[emission];
  const auto rx = element_positions(rf.geometry);
  const auto weights = receive_weights(apodization, rx.size());

  Image lri(grid, ImageKind::kLri);
  parallel_for(grid.nz, threads, [&](std::size_t iz) {
    const double z = grid.z_at(iz);
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Vec2 p{grid.x_at(ix), z};
      lri.at(iz, ix) = delay_and_sum(rf, emission, rx, weights, p, transmit_time(event, rf.geometry, p));
    }
  });
  return lri;
}

Image synthesize_hri(std::span<const Image> lris) {
  if (lris.empty()) throw ValidationError("synthesize_hri: no LRIs");
  Image hri(lris.front().grid, ImageKind::kHri);
  for (const Image& lri : lris) {
    if (!(lri.grid == hri.grid)) throw ValidationError("synthesize_hri: LRI grids differ");
    if (lri.values.size() != hri.values.size())
      throw ValidationError("synthesize_hri: LRI value count does not match its grid");
    for (std::size_t i = 0; i < hri.values.size(); ++i) hri.values[i] += lri.values[i];
  }
  return hri;
}

std::vector<Image> beamform_all_lris(const RfDataSet& rf, const ImageGrid& grid,
                                     Apodization apodization, std::size_t threads) {
  std::vector<Image> lris;
  lris.reserve(rf.num_emissions());
  for (std::size_t e = 0; e < rf.num_emissions(); ++e)
    lris.push_back(beamform_lri(rf, e, grid, apodization, threads));
  return lris;
}

namespace {

// Index of the scan line closest to a pixel; ties go to the lower index.
std::size_t nearest_line(const TransmitSequence& seq, Vec2 p) {
  const double key = seq.scan == ScanGeometry::kLinear ? p.x : std::atan2(p.x, p.z);
  std::size_t best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < seq.scanlines.size(); ++l) {
    const double gap = std::abs(seq.scanlines[l] - key);
    if (gap < best_gap) {
      best_gap = gap;
      best = l;
    }
  }
  return best;
}

}  // namespace

Image beamform_pa(const RfDataSet& rf, const ImageGrid& grid, Apodization apodization,
                  std::size_t threads) {
  grid.validate();
  check_shape(rf);
  if (rf.sequence.mode != SequenceMode::kPa)
    throw ValidationError("beamform_pa: dataset is not a PA acquisition");
  if (rf.sequence.scanlines.size() != rf.num_emissions())
    throw ValidationError("beamform_pa: expected one emission per scan line");
  const auto rx = element_positions(rf.geometry);
  const auto weights = receive_weights(apodization, rx.size());
  const double c = rf.geometry.sound_speed;

  Image out(grid, ImageKind::kPa);
  parallel_for(grid.nz, threads, [&](std::size_t iz) {
    const double z = grid.z_at(iz);
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Vec2 pixel{grid.x_at(ix), z};
      const std::size_t line = nearest_line(rf.sequence, pixel);
      const FocalLine& focal = *rf.sequence.events[line].focal_line;
      // Range along the line: depth for vertical lines, radius for steered ones.
      const double s = rf.sequence.scan == ScanGeometry::kLinear ? z : std::hypot(pixel.x, pixel.z);
      const Vec2 q = focal.point_at(s);
      const double t_tx = focal.reference_time + (s - focal.focus_range) / c;
      out.at(iz, ix) = delay_and_sum(rf, line, rx, weights, q, t_tx);
    }
  });
  return out;
}

}  // namespace stabeam
