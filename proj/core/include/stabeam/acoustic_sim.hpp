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
#include <vector>

#include "stabeam/array_model.hpp"

namespace stabeam {

struct Scatterer {
  double x = 0.0;             // m
  double z = 0.0;             // m, > 0
  double reflectivity = 1.0;  // unitless amplitude

  friend bool operator==(const Scatterer&, const Scatterer&) = default;
};

struct Phantom {
  std::vector<Scatterer> scatterers;

  void validate() const;
  friend bool operator==(const Phantom&, const Phantom&) = default;
};

/// Gaussian-modulated cosine excitation. sigma follows the FWHM-bandwidth
/// convention; the pulse is truncated at +/- 3 sigma.
struct PulseModel {
  double center_frequency = 5.0e6;
  double fractional_bandwidth = 0.6;

  void validate() const;
  double sigma() const;
  double half_duration() const { return 3.0 * sigma(); }
  double duration() const { return 2.0 * half_duration(); }
};

double sample_pulse(const PulseModel& pulse, double t);

/// Received echoes, stored [emission][channel][sample] as float (the on-disk
/// precision).
struct RfDataSet {
  ArrayGeometry geometry;
  TransmitSequence sequence;
  PulseModel pulse;
  std::size_t num_samples = 0;
  double noise_std = 0.0;
  std::uint64_t seed = 0;
  std::vector<float> samples;

  std::size_t num_emissions() const { return sequence.events.size(); }
  std::size_t num_channels() const { return geometry.num_elements; }

  std::span<const float> trace(std::size_t emission, std::size_t channel) const {
    return {samples.data() + (emission * num_channels() + channel) * num_samples, num_samples};
  }
  std::span<float> trace(std::size_t emission, std::size_t channel) {
    return {samples.data() + (emission * num_channels() + channel) * num_samples, num_samples};
  }

  /// Shape and finiteness checks; throws ValidationError.
  void validate() const;
};

/// Per-emission noise stream seed: splitmix64(seed ^ emission).
std::uint64_t emission_seed(std::uint64_t seed, std::size_t emission);

/// Samples needed to hold every echo of `phantom` including the pulse tail.
std::size_t required_samples(const Phantom& phantom, const ArrayGeometry& geometry,
                             const TransmitSequence& sequence, const PulseModel& pulse);

/// Point-scatterer forward model. Each (transmit element m, receive channel n,
/// scatterer s) contributes a pulse centred at tau_m + T(m, n) with amplitude
/// reflectivity * apod_m / (r_m * r_n), splatted onto the time axis with the
/// beamformer's two-tap kernel. White Gaussian noise is added afterwards.
/// Throws ValidationError if num_samples < required_samples().
RfDataSet simulate_rf(const Phantom& phantom, const ArrayGeometry& geometry,
                      const TransmitSequence& sequence, const PulseModel& pulse,
                      std::size_t num_samples, double noise_std, std::uint64_t seed,
                      std::size_t threads = 1);

}  // namespace stabeam
