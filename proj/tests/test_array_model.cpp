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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "stabeam/array_model.hpp"
#include "stabeam/errors.hpp"

using namespace stabeam;

namespace {

ArrayGeometry geometry(std::size_t n, double pitch = 0.3e-3) {
  ArrayGeometry g;
  g.num_elements = n;
  g.pitch = pitch;
  return g;
}

}  // namespace

TEST_CASE("element positions are centred and evenly spaced") {
  auto one = element_positions(geometry(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].x == 0.0);
  CHECK(one[0].z == 0.0);

  auto two = element_positions(geometry(2));
  CHECK(two[0].x == doctest::Approx(-0.15e-3).epsilon(1e-12));
  CHECK(two[1].x == doctest::Approx(0.15e-3).epsilon(1e-12));

  auto eight = element_positions(geometry(8));
  CHECK(eight[0].x == doctest::Approx(-1.05e-3).epsilon(1e-12));
  CHECK(eight[7].x == doctest::Approx(1.05e-3).epsilon(1e-12));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(eight[i].x == -eight[7 - i].x);
    if (i > 0) CHECK(eight[i].x - eight[i - 1].x == doctest::Approx(0.3e-3).epsilon(1e-12));
  }
}

TEST_CASE("geometry validation") {
  CHECK_NOTHROW(geometry(8).validate());
  auto g = geometry(8);
  g.num_elements = 0;
  CHECK_THROWS_AS(g.validate(), ValidationError);
  g = geometry(8);
  g.pitch = 0.0;
  CHECK_THROWS_AS(g.validate(), ValidationError);
  g = geometry(8);
  g.sampling_frequency = 3.9 * g.center_frequency;
  CHECK_THROWS_AS(g.validate(), ValidationError);
  g = geometry(8);
  g.sound_speed = -1540.0;
  CHECK_THROWS_AS(g.validate(), ValidationError);
}

TEST_CASE("STA sequence fires one element per event") {
  const auto seq = sta_sequence(geometry(8));
  REQUIRE(seq.size() == 8);
  CHECK(seq.mode == SequenceMode::kSta);
  CHECK(seq.events[3].active_elements == std::vector<std::size_t>{3});
  CHECK(seq.events[3].delays == std::vector<double>{0.0});
  CHECK(seq.events[3].apodization == std::vector<double>{1.0});
  CHECK(seq.events[3].label == EventLabel::kStaSingle);

  CHECK(sta_sequence(geometry(1)).events.at(0).active_elements == std::vector<std::size_t>{0});
  const auto four = sta_sequence(geometry(4));
  CHECK(four.size() == 4);
  for (const auto& e : four.events) CHECK(e.delays[0] == 0.0);
}

TEST_CASE("MSTA windows and delays") {
  SUBCASE("single-element subapertures reproduce STA") {
    const auto g = geometry(8);
    auto msta = msta_sequence(g, 1, 1, 2e-3);
    CHECK(msta.events == sta_sequence(g).events);
  }
  SUBCASE("three-element edge delay") {
    const auto seq = msta_sequence(geometry(3), 3, 3, 2e-3);
    REQUIRE(seq.size() == 1);
    const auto& d = seq.events[0].delays;
    const double expected = (std::sqrt(0.3e-3 * 0.3e-3 + 2e-3 * 2e-3) - 2e-3) / 1540.0;
    CHECK(expected == doctest::Approx(1.4529e-8).epsilon(1e-3));
    CHECK(d[0] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(d[2] == d[0]);
    CHECK(d[1] == 0.0);
    REQUIRE(seq.events[0].virtual_source);
    CHECK(seq.events[0].virtual_source->position.z == -2e-3);
    CHECK(seq.events[0].virtual_source->position.x == doctest::Approx(0.0));
  }
  SUBCASE("overlapping windows") {
    const auto seq = msta_sequence(geometry(8), 4, 2, 2e-3);
    REQUIRE(seq.size() == 3);
    CHECK(seq.events[0].active_elements == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(seq.events[1].active_elements == std::vector<std::size_t>{2, 3, 4, 5});
    CHECK(seq.events[2].active_elements == std::vector<std::size_t>{4, 5, 6, 7});
  }
  SUBCASE("even subaperture has its source between the centre elements") {
    const auto seq = msta_sequence(geometry(8), 4, 4, 2e-3);
    REQUIRE(seq.size() == 2);
    const auto& d = seq.events[0].delays;
    CHECK(d[1] == 0.0);
    CHECK(d[2] == 0.0);
    CHECK(d[0] == doctest::Approx(d[3]).epsilon(1e-12));
    CHECK(seq.events[0].virtual_source->normalization_offset > 0.0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(msta_sequence(geometry(8), 9, 1, 2e-3), ValidationError);
    CHECK_THROWS_AS(msta_sequence(geometry(8), 0, 1, 2e-3), ValidationError);
    CHECK_THROWS_AS(msta_sequence(geometry(8), 4, 0, 2e-3), ValidationError);
    CHECK_THROWS_AS(msta_sequence(geometry(8), 4, 1, 0.0), ValidationError);
  }
}

TEST_CASE("default virtual source depth") {
  const auto g = geometry(8);
  // half width of a 4-element window is 0.6 mm
  CHECK(default_virtual_source_depth(g, 4) ==
        doctest::Approx(2.0 * 0.6e-3 / std::tan(std::numbers::pi / 6)).epsilon(1e-12));
}

TEST_CASE("PA focal law") {
  const auto g = geometry(8);
  const std::vector<double> axis{0.0};
  const auto seq = pa_sequence(g, 30e-3, axis);
  REQUIRE(seq.size() == 1);
  const auto& d = seq.events[0].delays;
  CHECK(d[0] == 0.0);
  CHECK(d[7] == 0.0);
  for (std::size_t i = 0; i < 8; ++i) CHECK(d[i] == doctest::Approx(d[7 - i]).epsilon(1e-12));
  CHECK(d[3] > d[2]);
  const double d0 = std::sqrt(1.05e-3 * 1.05e-3 + 30e-3 * 30e-3);
  const double centre = std::sqrt(0.15e-3 * 0.15e-3 + 30e-3 * 30e-3);
  CHECK((d0 - 30e-3) / 1540.0 == doctest::Approx(1.193e-8).epsilon(1e-3));
  CHECK(d[3] == doctest::Approx((d0 - centre) / 1540.0).epsilon(1e-9));
  CHECK(seq.events[0].focal_line->reference_time == doctest::Approx(d0 / 1540.0).epsilon(1e-12));

  const auto single = pa_sequence(geometry(1), 10e-3, std::vector<double>{1e-3});
  CHECK(single.events[0].delays == std::vector<double>{0.0});

  CHECK_THROWS_AS(pa_sequence(g, 0.0, axis), ValidationError);
  CHECK_THROWS_AS(pa_sequence(g, 10e-3, std::vector<double>{}), ValidationError);
}

TEST_CASE("property: delays are normalized, finite and focal arrival is simultaneous") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> elements(1, 32);
  std::uniform_real_distribution<double> pitch(0.1e-3, 0.6e-3);
  std::uniform_real_distribution<double> depth(1e-3, 80e-3);
  std::uniform_real_distribution<double> lateral(-10e-3, 10e-3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = geometry(elements(rng), pitch(rng));
    const std::vector<double> lines{lateral(rng), lateral(rng)};
    const auto pa = pa_sequence(g, depth(rng), lines);
    for (const auto& ev : pa.events) {
      CHECK(*std::min_element(ev.delays.begin(), ev.delays.end()) == 0.0);
      const Vec2 focus = ev.focal_line->focus();
      const double arrival0 = ev.delays[0] + distance(g.element_position(0), focus) / g.sound_speed;
      for (std::size_t i = 0; i < g.num_elements; ++i) {
        const double arrival = ev.delays[i] + distance(g.element_position(i), focus) / g.sound_speed;
        CHECK(std::abs(arrival - arrival0) < 1e-15);
      }
    }
    std::uniform_int_distribution<std::size_t> sub(1, g.num_elements);
    const std::size_t size = sub(rng);
    const auto msta = msta_sequence(g, size, 1 + rng() % 3, depth(rng) / 10);
    CHECK_NOTHROW(msta.validate(g));
    for (const auto& ev : msta.events) {
      CHECK(*std::min_element(ev.delays.begin(), ev.delays.end()) == 0.0);
      for (std::size_t i = 0; i < ev.delays.size(); ++i) {
        CHECK(std::isfinite(ev.delays[i]));
        CHECK(ev.delays[i] >= 0.0);
        CHECK(ev.delays[i] == doctest::Approx(ev.delays[ev.delays.size() - 1 - i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("sequence validation catches malformed events") {
  const auto g = geometry(4);
  auto seq = sta_sequence(g);
  seq.events[1].delays[0] = 1e-9;
  CHECK_THROWS_AS(seq.validate(g), ValidationError);
  seq = sta_sequence(g);
  seq.events[1].active_elements = {1, 1};
  seq.events[1].delays = {0, 0};
  seq.events[1].apodization = {1, 1};
  CHECK_THROWS_AS(seq.validate(g), ValidationError);
  seq = sta_sequence(g);
  seq.events[2].active_elements = {9};
  CHECK_THROWS_AS(seq.validate(g), ValidationError);
}
