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

#include "stabeam/acoustic_sim.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "stabeam/delay.hpp"
#include "stabeam/errors.hpp"
#include "stabeam/parallel.hpp"

namespace stabeam {

void Phantom::validate() const {
  for (std::size_t i = 0; i < scatterers.size(); ++i) {
    const auto& s = scatterers[i];
    if (!std::isfinite(s.x) || !std::isfinite(s.z) || !std::isfinite(s.reflectivity))
      throw ValidationError("phantom: scatterer " + std::to_string(i) + " is not finite");
    if (!(s.z > 0.0))
      throw ValidationError("phantom: scatterer " + std::to_string(i) + " must have z > 0");
  }
}

void PulseModel::validate() const {
  if (!(std::isfinite(center_frequency) && center_frequency > 0.0))
    throw ValidationError("pulse: center_frequency must be > 0");
  if (!(fractional_bandwidth > 0.0 && fractional_bandwidth < 2.0))
    throw ValidationError("pulse: fractional_bandwidth must be in (0, 2)");
}

double PulseModel::sigma() const {
  const double fwhm_to_sigma = 2.0 * std::sqrt(2.0 * std::numbers::ln2);
  return fwhm_to_sigma / (2.0 * std::numbers::pi * fractional_bandwidth * center_frequency);
}

double sample_pulse(const PulseModel& pulse, double t) {
  const double sigma = pulse.sigma();
  if (std::abs(t) > 3.0 * sigma) return 0.0;
  return std::exp(-t * t / (2.0 * sigma * sigma)) *
         std::cos(2.0 * std::numbers::pi * pulse.center_frequency * t);
}

void RfDataSet::validate() const {
  geometry.validate();
  sequence.validate(geometry);
  if (num_samples == 0) throw ValidationError("rf: num_samples must be > 0");
  if (samples.size() != num_emissions() * num_channels() * num_samples)
    throw ValidationError("rf: sample count does not match emissions x channels x samples");
  for (float v : samples)
    if (!std::isfinite(v)) throw ValidationError("rf: non-finite sample");
}

std::uint64_t emission_seed(std::uint64_t seed, std::size_t emission) {
  std::uint64_t z = (seed ^ static_cast<std::uint64_t>(emission)) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::size_t pulse_half_length(const PulseModel& pulse, double fs) {
  return static_cast<std::size_t>(std::ceil(pulse.half_duration() * fs));
}

}  // namespace

std::size_t required_samples(const Phantom& phantom, const ArrayGeometry& geometry,
                             const TransmitSequence& sequence, const PulseModel& pulse) {
  const double fs = geometry.sampling_frequency;
  const std::size_t half = pulse_half_length(pulse, fs);
  double latest = 0.0;
  for (const auto& event : sequence.events)
    for (std::size_t k = 0; k < event.active_elements.size(); ++k)
      for (std::size_t n = 0; n < geometry.num_elements; ++n)
        for (const auto& s : phantom.scatterers) {
          const double t = event.delays[k] +
                           round_trip_delay(geometry.element_position(event.active_elements[k]),
                                            geometry.element_position(n), {s.x, s.z},
                                            geometry.sound_speed);
          latest = std::max(latest, t);
        }
  if (phantom.scatterers.empty()) return 1;
  return static_cast<std::size_t>(std::floor(latest * fs)) + half + 2;
}

RfDataSet simulate_rf(const Phantom& phantom, const ArrayGeometry& geometry,
                      const TransmitSequence& sequence, const PulseModel& pulse,
                      std::size_t num_samples, double noise_std, std::uint64_t seed,
                      std::size_t threads) {
  phantom.validate();
  geometry.validate();
  sequence.validate(geometry);
  pulse.validate();
  if (!(std::isfinite(noise_std) && noise_std >= 0.0))
    throw ValidationError("simulate: noise_std must be finite and >= 0");
  if (num_samples == 0) throw ValidationError("simulate: num_samples must be > 0");
  const std::size_t needed = required_samples(phantom, geometry, sequence, pulse);
  if (num_samples < needed)
    throw ValidationError("simulate: num_samples=" + std::to_string(num_samples) +
                          " cannot hold the deepest echo; required num_samples >= " +
                          std::to_string(needed));

  RfDataSet rf;
  rf.geometry = geometry;
  rf.sequence = sequence;
  rf.pulse = pulse;
  rf.num_samples = num_samples;
  rf.noise_std = noise_std;
  rf.seed = seed;
  rf.samples.assign(rf.num_emissions() * rf.num_channels() * num_samples, 0.0f);

  const double fs = geometry.sampling_frequency;
  const double c = geometry.sound_speed;
  const std::size_t half = pulse_half_length(pulse, fs);
  std::vector<double> pulse_taps(2 * half + 1);
  for (std::size_t j = 0; j < pulse_taps.size(); ++j)
    pulse_taps[j] = sample_pulse(pulse, (static_cast<double>(j) - static_cast<double>(half)) / fs);

  const auto positions = element_positions(geometry);

  parallel_for(rf.num_emissions(), threads, [&](std::size_t e) {
    const TransmitEvent& event = sequence.events[e];
    std::vector<double> acc(num_samples);
    std::mt19937_64 rng(emission_seed(seed, e));
    std::normal_distribution<double> noise(0.0, noise_std > 0.0 ? noise_std : 1.0);

    for (std::size_t n = 0; n < geometry.num_elements; ++n) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (const auto& s : phantom.scatterers) {
        const Vec2 p{s.x, s.z};
        const double r_rx = distance(p, positions[n]);
        for (std::size_t k = 0; k < event.active_elements.size(); ++k) {
          const Vec2 tx = positions[event.active_elements[k]];
          const double r_tx = distance(p, tx);
          const double t = event.delays[k] + round_trip_delay(tx, positions[n], p, c);
          const double amplitude = s.reflectivity * event.apodization[k] / (r_tx * r_rx);
          const DelaySplit split = split_delay(t, fs);
          const double w0 = amplitude * (1.0 - split.fine);
          const double w1 = amplitude * split.fine;
          // Tap j lands on sample coarse - half + j (weight w0) and the next one (w1).
          for (std::size_t j = 0; j < pulse_taps.size(); ++j) {
            if (split.coarse + j < half) continue;
            const std::size_t i = split.coarse + j - half;
            acc[i] += w0 * pulse_taps[j];
            acc[i + 1] += w1 * pulse_taps[j];
          }
        }
      }
      auto out = rf.trace(e, n);
      for (std::size_t i = 0; i < num_samples; ++i) {
        const double v = noise_std > 0.0 ? acc[i] + noise(rng) : acc[i];
        out[i] = static_cast<float>(v);
      }
    }
  });
  return rf;
}

}  // namespace stabeam
