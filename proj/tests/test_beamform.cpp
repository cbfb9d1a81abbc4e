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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles/naive_das.hpp"
#include "stabeam/beamform.hpp"
#include "stabeam/errors.hpp"

using namespace stabeam;

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::pair<std::size_t, std::size_t> argmax_abs(const Image& im) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < im.values.size(); ++i)
    if (std::abs(im.values[i]) > std::abs(im.values[best])) best = i;
  return {best / im.grid.nx, best % im.grid.nx};
}

ImageGrid small_grid() {
  ImageGrid g;
  g.x_min = -3e-3;
  g.x_max = 3e-3;
  g.z_min = 10e-3;
  g.z_max = 20e-3;
  g.nx = 32;
  g.nz = 32;
  return g;
}

}  // namespace

TEST_CASE("split_delay examples") {
  const auto a = split_delay(1.0e-6, 40e6);
  CHECK(a.coarse == 40);
  CHECK(a.fine == doctest::Approx(0.0).epsilon(1e-9));
  const auto b = split_delay(1.0125e-6, 40e6);
  CHECK(b.coarse == 40);
  CHECK(b.fine == doctest::Approx(0.5));
  const auto c = split_delay(0.0, 40e6);
  CHECK(c.coarse == 0);
  CHECK(c.fine == 0.0);
  CHECK_THROWS_AS(split_delay(-1e-9, 40e6), ValidationError);
  CHECK_THROWS_AS(split_delay(std::numeric_limits<double>::quiet_NaN(), 40e6), ValidationError);
}

TEST_CASE("two-tap interpolation") {
  const std::vector<float> tr{0.0f, 2.0f, 4.0f, -4.0f};
  const std::span<const float> s(tr);
  CHECK(read_interpolated(s, DelaySplit{1, 0.25}) == doctest::Approx(2.5));
  CHECK(read_interpolated(s, DelaySplit{2, 0.5}) == doctest::Approx(0.0));
  CHECK(read_interpolated(s, DelaySplit{0, 0.0}) == 0.0);
  // last sample and beyond read as zero
  CHECK(read_interpolated(s, DelaySplit{3, 0.0}) == 0.0);
  CHECK(read_interpolated(s, DelaySplit{100, 0.5}) == 0.0);
  CHECK(read_interpolated(s, -0.5) == 0.0);
  CHECK(read_interpolated(s, 4.0) == 0.0);
}

TEST_CASE("split then interpolate equals direct interpolation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> delay(0.0, 100e-6);
  std::vector<float> tr(4096);
  std::normal_distribution<float> sample;
  for (float& v : tr) v = sample(rng);
  const std::span<const float> s(tr);
  const double fs = 40e6;
  std::size_t mismatches = 0;
  for (int i = 0; i < 100000; ++i) {
    const double t = delay(rng);
    const double via_split = read_interpolated(s, split_delay(t, fs));
    const double direct = read_interpolated(s, t * fs);
    if (via_split != direct) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("receive weights") {
  const auto rect = receive_weights(Apodization::kRectangular, 5);
  CHECK(std::all_of(rect.begin(), rect.end(), [](double w) { return w == 1.0; }));
  const auto hann = receive_weights(Apodization::kHann, 5);
  CHECK(hann[2] == doctest::Approx(1.0));
  CHECK(hann[0] == doctest::Approx(hann[4]));
  CHECK(hann[0] > 0.0);
  CHECK(hann[0] < hann[1]);
}

TEST_CASE("LRI matches the reference beamformer") {
  ArrayGeometry g;
  const Phantom ph{{{0.0, 14e-3, 1.0}, {1.5e-3, 16e-3, 0.6}, {-2e-3, 12e-3, -0.4}}};
  const PulseModel pulse{g.center_frequency, 0.6};
  const auto grid = small_grid();
  for (const auto& seq : {sta_sequence(g), msta_sequence(g, 3, 1, default_virtual_source_depth(g, 3))}) {
    const auto rf = simulate_rf(ph, g, seq, pulse, 1400, 1.0, 5);
    for (Apodization apod : {Apodization::kRectangular, Apodization::kHann}) {
      for (std::size_t e = 0; e < rf.num_emissions(); ++e) {
        const auto got = beamform_lri(rf, e, grid, apod, 2);
        const auto want = oracle::lri(rf, e, grid, receive_weights(apod, g.num_elements));
        const double scale = max_abs(want.values);
        REQUIRE(scale > 0.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < got.values.size(); ++i)
          worst = std::max(worst, std::abs(got.values[i] - want.values[i]) / scale);
        CHECK(worst <= 1e-9);
      }
    }
  }
}

TEST_CASE("LRI is linear in the RF data") {
  ArrayGeometry g;
  const auto seq = sta_sequence(g);
  const PulseModel pulse{g.center_frequency, 0.6};
  const auto grid = small_grid();
  auto a = simulate_rf({{{0.5e-3, 15e-3, 1.0}}}, g, seq, pulse, 1400, 0.0, 0);
  auto b = simulate_rf({}, g, seq, pulse, 1400, 2.0, 11);
  auto sum = a;
  for (std::size_t i = 0; i < sum.samples.size(); ++i) sum.samples[i] = a.samples[i] + b.samples[i];
  // keep the float sum exact so linearity is tested on identical inputs
  for (std::size_t i = 0; i < sum.samples.size(); ++i) b.samples[i] = sum.samples[i] - a.samples[i];
  const auto la = beamform_lri(a, 4, grid);
  const auto lb = beamform_lri(b, 4, grid);
  const auto ls = beamform_lri(sum, 4, grid);
  const double scale = max_abs(ls.values);
  for (std::size_t i = 0; i < ls.values.size(); ++i)
    CHECK(std::abs(ls.values[i] - la.values[i] - lb.values[i]) <= 1e-6 * scale);

  auto zero = a;
  std::fill(zero.samples.begin(), zero.samples.end(), 0.0f);
  const auto lz = beamform_lri(zero, 0, grid);
  CHECK(max_abs(lz.values) == 0.0);
}

TEST_CASE("point target focuses at its location") {
  ArrayGeometry g;
  const PulseModel pulse{g.center_frequency, 0.6};
  ImageGrid grid;
  grid.x_min = -2e-3;
  grid.x_max = 2e-3;
  grid.z_min = 14e-3;
  grid.z_max = 16e-3;
  grid.nx = 41;
  grid.nz = 81;
  const Vec2 p{0.0, 15e-3};
  const auto rf = simulate_rf({{{p.x, p.z, 1.0}}}, g, sta_sequence(g), pulse, 1400, 0.0, 0);
  const auto hri = synthesize_hri(beamform_all_lris(rf, grid));
  CHECK(hri.kind == ImageKind::kHri);
  const auto [iz, ix] = argmax_abs(hri);
  CHECK(std::abs(grid.x_at(ix) - p.x) <= grid.dx());
  CHECK(std::abs(grid.z_at(iz) - p.z) <= 2 * grid.dz());
}

TEST_CASE("HRI is the sum of its LRIs") {
  ImageGrid grid = small_grid();
  grid.nx = 2;
  grid.nz = 1;
  Image a(grid, ImageKind::kLri), b(grid, ImageKind::kLri);
  a.values = {1.0, -2.0};
  b.values = {0.5, 2.0};
  const std::vector<Image> lris{a, b};
  const auto hri = synthesize_hri(lris);
  CHECK(hri.values == std::vector<double>{1.5, 0.0});
  CHECK(synthesize_hri(std::span<const Image>(lris.data(), 1)).values == a.values);
  CHECK_THROWS_AS(synthesize_hri(std::span<const Image>{}), ValidationError);
  Image other(small_grid(), ImageKind::kLri);
  const std::vector<Image> mixed{a, other};
  CHECK_THROWS_AS(synthesize_hri(mixed), ValidationError);
}

TEST_CASE("coherent compounding: signal grows with N, noise with sqrt(N)") {
  ArrayGeometry g;
  const PulseModel pulse{g.center_frequency, 0.6};
  ImageGrid grid = small_grid();
  grid.x_min = -0.2e-3;
  grid.x_max = 0.2e-3;
  grid.z_min = 14.9e-3;
  grid.z_max = 15.1e-3;
  grid.nx = 5;
  grid.nz = 21;
  const auto seq = sta_sequence(g);
  const auto clean = simulate_rf({{{0.0, 15e-3, 1.0}}}, g, seq, pulse, 1400, 0.0, 0);
  const auto lris = beamform_all_lris(clean, grid);
  const auto hri = synthesize_hri(lris);
  double lri_peak = 0.0;
  for (const auto& l : lris) lri_peak += max_abs(l.values);
  lri_peak /= double(lris.size());
  // eight nearly phase-aligned LRIs at the target
  CHECK(max_abs(hri.values) / lri_peak == doctest::Approx(8.0).epsilon(0.1));
}

TEST_CASE("PA image focuses a point at the focal depth") {
  ArrayGeometry g;
  const PulseModel pulse{g.center_frequency, 0.6};
  ImageGrid grid;
  grid.x_min = -2e-3;
  grid.x_max = 2e-3;
  grid.z_min = 24e-3;
  grid.z_max = 26e-3;
  grid.nx = 41;
  grid.nz = 81;
  const auto lines = evenly_spaced(grid.x_at(0), grid.x_at(grid.nx - 1), grid.nx);
  const auto seq = pa_sequence(g, 25e-3, lines);
  const auto rf = simulate_rf({{{0.0, 25e-3, 1.0}}}, g, seq, pulse, 2400, 0.0, 0);
  const auto pa = beamform_pa(rf, grid);
  CHECK(pa.kind == ImageKind::kPa);
  const auto [iz, ix] = argmax_abs(pa);
  CHECK(std::abs(grid.x_at(ix)) <= 1.001 * grid.dx());
  CHECK(std::abs(grid.z_at(iz) - 25e-3) <= 2 * grid.dz());

  CHECK_THROWS_WITH_AS(beamform_lri(rf, 0, grid), "LRI undefined for PA mode", ValidationError);
  const auto sta = simulate_rf({}, g, sta_sequence(g), pulse, 16, 0.0, 0);
  CHECK_THROWS_AS(beamform_pa(sta, grid), ValidationError);
}

TEST_CASE("sector PA focuses along a steered line") {
  ArrayGeometry g;
  const PulseModel pulse{g.center_frequency, 0.6};
  const double angle = 0.1;
  const Vec2 p{20e-3 * std::sin(angle), 20e-3 * std::cos(angle)};
  ImageGrid grid;
  grid.x_min = p.x - 2e-3;
  grid.x_max = p.x + 2e-3;
  grid.z_min = p.z - 1e-3;
  grid.z_max = p.z + 1e-3;
  grid.nx = 41;
  grid.nz = 81;
  const auto angles = evenly_spaced(-0.3, 0.3, 61);
  const auto seq = pa_sequence(g, 20e-3, angles, ScanGeometry::kSector);
  const auto rf = simulate_rf({{{p.x, p.z, 1.0}}}, g, seq, pulse, 2400, 0.0, 0);
  const auto pa = beamform_pa(rf, grid);
  const auto [iz, ix] = argmax_abs(pa);
  CHECK(std::abs(grid.x_at(ix) - p.x) <= 2 * grid.dx());
  CHECK(std::abs(grid.z_at(iz) - p.z) <= 2 * grid.dz());
}

TEST_CASE("pixels whose echo falls outside the record are zero") {
  ArrayGeometry g;
  const PulseModel pulse{g.center_frequency, 0.6};
  const auto rf = simulate_rf({}, g, sta_sequence(g), pulse, 64, 3.0, 1);
  const auto lri = beamform_lri(rf, 0, small_grid());
  CHECK(max_abs(lri.values) == 0.0);
  CHECK_THROWS_AS(beamform_lri(rf, 8, small_grid()), ValidationError);
}

TEST_CASE("round-trip delay arithmetic") {
  CHECK(round_trip_delay({0, 0}, {0, 0}, {0, 30e-3}, 1540) == doctest::Approx(3.8961e-5).epsilon(1e-4));
  const double t = round_trip_delay({0, 0}, {3e-3, 0}, {0, 40e-3}, 1540);
  CHECK(t == doctest::Approx(5.2021e-5).epsilon(1e-4));
  CHECK(round_trip_delay({3e-3, 0}, {0, 0}, {0, 40e-3}, 1540) == t);
  const auto s = split_delay(1558.44 / 40e6, 40e6);
  CHECK(s.coarse == 1558);
  CHECK(s.fine == doctest::Approx(0.44).epsilon(1e-6));
  const auto whole = split_position(100.0);
  CHECK(whole.coarse == 100);
  CHECK(whole.fine == 0.0);
  std::vector<float> tr(10, 0.0f);
  tr[5] = 2.0f;
  tr[6] = 4.0f;
  CHECK(read_interpolated(std::span<const float>(tr), 5.0) == 2.0);
  CHECK(read_interpolated(std::span<const float>(tr), 5.5) == 3.0);
}
