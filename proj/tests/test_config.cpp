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

#include <filesystem>
#include <string>

#include "doctest.h"
#include "stabeam/config.hpp"
#include "stabeam/errors.hpp"

using namespace stabeam;

namespace {

const std::filesystem::path kData = STABEAM_TEST_DATA_DIR;

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("defaults") {
  const auto c = parse_config(R"({"schema": 1})");
  CHECK(c.geometry.num_elements == 8);
  CHECK(c.geometry.pitch == 0.3e-3);
  CHECK(c.geometry.sampling_frequency == 40e6);
  CHECK(c.mode == SequenceMode::kSta);
  CHECK(c.pa.num_scanlines == 121);
  CHECK(c.simulation.num_samples == 4096);
  REQUIRE(c.phantom.scatterers.size() == 1);
  CHECK(c.phantom.scatterers[0].z == 25e-3);
  CHECK(c.out_dir == "out");
  CHECK(c.metrics.hint().z == doctest::Approx(25e-3));
}

TEST_CASE("full file loads") {
  const auto c = load_config(kData / "small.json");
  CHECK(c.simulation.num_samples == 1200);
  CHECK(c.simulation.seed == 7);
  CHECK(c.imaging.grid.nx == 24);
  CHECK(c.imaging.dynamic_range == 50.0);
  CHECK(c.phantom.scatterers.size() == 2);
  CHECK(c.metrics.peak_hint.has_value());
  CHECK(build_sequence(c, SequenceMode::kMsta).events.size() == 2);
  CHECK(build_sequence(c, SequenceMode::kPa).events.size() == 9);
  CHECK(build_sequence(c, SequenceMode::kSta).events.size() == 8);
}

TEST_CASE("errors carry file, line and field") {
  CHECK(error_of([] { load_config(kData / "unknown_field.json"); }) ==
        (kData / "unknown_field.json").string() + ":5: simulation.noise: unknown field");
  CHECK(error_of([] { load_config(kData / "bad_value.json"); }) ==
        (kData / "bad_value.json").string() + ":5: geometry.pitch: must be > 0");
  CHECK(error_of([] { parse_config("{\n\"schema\": 1,\n\"mode\": 3\n}", "m.json"); })
            .rfind("m.json:3: mode:", 0) == 0);
  CHECK(error_of([] { parse_config("{\"schema\": 2}", "v.json"); }).find("schema") !=
        std::string::npos);
  CHECK(error_of([] { parse_config("{}", "v.json"); }).find("schema") != std::string::npos);
  CHECK_FALSE(error_of([] { load_config(kData / "malformed.json"); }).empty());
  CHECK_THROWS_AS(load_config(kData / "does_not_exist.json"), IoError);
}

TEST_CASE("nested and array errors are located") {
  const std::string text =
      "{\n"
      "  \"schema\": 1,\n"
      "  \"phantom\": {\n"
      "    \"scatterers\": [\n"
      "      [0, 0.01, 1],\n"
      "      [0, -0.01, 1]\n"
      "    ]\n"
      "  }\n"
      "}\n";
  const auto msg = error_of([&] { parse_config(text, "p.json"); });
  CHECK(msg.rfind("p.json:6: phantom.scatterers.1", 0) == 0);
  const auto grid = error_of([] {
    parse_config("{\"schema\": 1,\n\"imaging\": {\"grid\": {\n\"nx\": -4}}}", "g.json");
  });
  CHECK(grid.rfind("g.json:3: imaging.grid.nx", 0) == 0);
}

TEST_CASE("phantom file resolves relative to the config") {
  const auto c = load_config(kData / "phantom_file.json");
  REQUIRE(c.phantom.scatterers.size() == 2);
  CHECK(c.phantom.scatterers[1].x == -1e-3);
  CHECK(c.phantom.scatterers[1].reflectivity == 0.25);
}

TEST_CASE("effective config round-trips") {
  for (const char* name : {"small.json", "phantom_file.json"}) {
    const auto c = resolved(load_config(kData / name));
    const std::string json = effective_config_json(c);
    const auto again = parse_config(json, "manifest.json");
    CHECK(effective_config_json(again) == json);
    CHECK(again.phantom == c.phantom);
    CHECK(again.imaging.grid == c.imaging.grid);
    CHECK(again.geometry == c.geometry);
    CHECK(*again.msta.virtual_source_depth == *c.msta.virtual_source_depth);
  }
}

TEST_CASE("resolution of derived defaults") {
  auto c = resolved(parse_config(R"({"schema": 1, "msta": {"subaperture_size": 3}})"));
  CHECK(c.msta.stride == 3);
  CHECK(*c.msta.virtual_source_depth == doctest::Approx(default_virtual_source_depth(c.geometry, 3)));
  REQUIRE(c.pa.scanlines.has_value());
  CHECK(c.pa.scanlines->size() == 121);
  const auto sector = resolved(parse_config(
      R"({"schema": 1, "pa": {"scan": "sector", "num_scanlines": 5, "sector_half_angle": 0.2}})"));
  CHECK(sector.pa.scanlines->front() == doctest::Approx(-0.2));
  CHECK(sector.pa.scanlines->back() == doctest::Approx(0.2));
}

TEST_CASE("cross-field validation") {
  CHECK_THROWS_AS(parse_config(R"({"schema": 1, "msta": {"subaperture_size": 9}})"), ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"schema": 1, "geometry": {"sampling_frequency": 10e6}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"schema": 1, "imaging": {"apodization": "kaiser"}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"schema": 1, "simulation": {"num_samples": 0}})"), ValidationError);
}
