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

#include "stabeam/config.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "json.hpp"
#include "stabeam/errors.hpp"
#include "stabeam/file_formats.hpp"

namespace stabeam {

namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON parsing with source lines. nlohmann/json does not report positions of
// values, so the input is fed through an iterator that counts newlines and a
// SAX handler records the current line for every object key and array
// element, keyed by JSON pointer.

struct LineCountingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  std::size_t* newlines = nullptr;

  reference operator*() const { return *p; }
  LineCountingIterator& operator++() {
    if (*p == '\n') ++*newlines;
    ++p;
    return *this;
  }
  LineCountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) {
    return a.p == b.p;
  }
};

using LineMap = std::map<std::string, std::size_t, std::less<>>;

class LocatingSax {
 public:
  LocatingSax(json& root, const std::size_t* newlines, LineMap& lines)
      : dom_(root, true), newlines_(newlines), lines_(lines) {}

  bool null() { return note(), dom_.null(); }
  bool boolean(bool v) { return note(), dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return note(), dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return note(), dom_.number_unsigned(v); }
  bool number_float(json::number_float_t v, const json::string_t& s) {
    return note(), dom_.number_float(v, s);
  }
  bool string(json::string_t& v) { return note(), dom_.string(v); }
  bool binary(json::binary_t& v) { return note(), dom_.binary(v); }
  bool start_object(std::size_t n) {
    note();
    frames_.push_back({false, {}, 0, 0});
    return dom_.start_object(n);
  }
  bool key(json::string_t& k) {
    frames_.back().key = k;
    lines_[pointer()] = line();
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    note();
    frames_.push_back({true, {}, 0, 0});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    return dom_.end_array();
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    message_ = ex.what();
    return false;
  }

  const std::string& error() const { return message_; }

 private:
  struct Frame {
    bool is_array;
    std::string key;
    std::size_t next;
    std::size_t current;
  };

  std::size_t line() const { return *newlines_ + 1; }

  // An array element starts; record its pointer and line.
  void note() {
    if (frames_.empty() || !frames_.back().is_array) return;
    frames_.back().current = frames_.back().next++;
    lines_[pointer()] = line();
  }

  std::string pointer() const {
    std::string out;
    for (const Frame& f : frames_)
      out += "/" + (f.is_array ? std::to_string(f.current) : f.key);
    return out;
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  const std::size_t* newlines_;
  LineMap& lines_;
  std::vector<Frame> frames_;
  std::string message_;
};

// ---------------------------------------------------------------------------

struct Node {
  const json* value;  // null when absent
  std::string pointer;

  bool present() const { return value != nullptr && !value->is_null(); }
};

class Reader {
 public:
  Reader(const json& root, const LineMap& lines, std::string origin)
      : root_(root), lines_(lines), origin_(std::move(origin)) {}

  Node root() const { return {&root_, ""}; }

  Node child(const Node& parent, std::string_view key) const {
    std::string ptr = parent.pointer + "/" + std::string(key);
    if (!parent.present() || !parent.value->is_object()) return {nullptr, std::move(ptr)};
    auto it = parent.value->find(key);
    return {it == parent.value->end() ? nullptr : &*it, std::move(ptr)};
  }

  Node element(const Node& parent, std::size_t index) const {
    return {&(*parent.value)[index], parent.pointer + "/" + std::to_string(index)};
  }

  [[noreturn]] void fail(const Node& node, const std::string& message) const {
    std::ostringstream out;
    out << origin_ << ':' << line_of(node.pointer) << ": " << field_name(node.pointer) << ": "
        << message;
    throw ValidationError(out.str());
  }

  void expect_object(const Node& node, std::initializer_list<std::string_view> allowed) const {
    if (!node.present()) return;
    if (!node.value->is_object()) fail(node, "expected an object");
    for (auto it = node.value->begin(); it != node.value->end(); ++it) {
      bool known = false;
      for (auto a : allowed) known = known || it.key() == a;
      if (!known) fail(child(node, it.key()), "unknown field");
    }
  }

  double real(const Node& node, double fallback) const {
    if (!node.present()) return fallback;
    if (!node.value->is_number()) fail(node, "expected a number");
    const double v = node.value->get<double>();
    if (!std::isfinite(v)) fail(node, "must be finite");
    return v;
  }

  double positive(const Node& node, double fallback) const {
    const double v = real(node, fallback);
    if (!(v > 0.0)) fail(node, "must be > 0");
    return v;
  }

  std::uint64_t count(const Node& node, std::uint64_t fallback) const {
    if (!node.present()) return fallback;
    if (!node.value->is_number_integer() || node.value->get<std::int64_t>() < 0)
      fail(node, "expected a nonnegative integer");
    return node.value->get<std::uint64_t>();
  }

  std::string text(const Node& node, std::string fallback) const {
    if (!node.present()) return fallback;
    if (!node.value->is_string()) fail(node, "expected a string");
    return node.value->get<std::string>();
  }

  // Runs fn(); a ValidationError it raises is re-thrown located at node.
  template <typename Fn>
  auto located(const Node& node, Fn&& fn) const {
    try {
      return fn();
    } catch (const ValidationError& e) {
      fail(node, e.what());
    }
  }

 private:
  std::size_t line_of(std::string_view pointer) const {
    for (std::string p(pointer);; p.erase(p.rfind('/'))) {
      auto it = lines_.find(p);
      if (it != lines_.end()) return it->second;
      if (p.empty()) return 1;
    }
  }

  static std::string field_name(std::string_view pointer) {
    if (pointer.empty()) return "(root)";
    std::string out(pointer.substr(1));
    for (char& ch : out)
      if (ch == '/') ch = '.';
    return out;
  }

  const json& root_;
  const LineMap& lines_;
  std::string origin_;
};

std::vector<Scatterer> read_phantom_file(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<Scatterer> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Scatterer s;
    std::string extra;
    if (!(fields >> s.x >> s.z >> s.reflectivity) || (fields >> extra))
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": expected 'x z reflectivity'");
    out.push_back(s);
  }
  return out;
}

RegionSpec read_region(const Reader& r, const Node& node, RegionSpec fallback) {
  r.expect_object(node, {"x_min", "x_max", "z_min", "z_max"});
  RegionSpec out = fallback;
  out.x_min = r.real(r.child(node, "x_min"), fallback.x_min);
  out.x_max = r.real(r.child(node, "x_max"), fallback.x_max);
  out.z_min = r.real(r.child(node, "z_min"), fallback.z_min);
  out.z_max = r.real(r.child(node, "z_max"), fallback.z_max);
  if (!(out.x_min <= out.x_max)) r.fail(r.child(node, "x_max"), "must be >= x_min");
  if (!(out.z_min <= out.z_max)) r.fail(r.child(node, "z_max"), "must be >= z_min");
  return out;
}

RunConfig parse_document(const Reader& r, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  const Node root = r.root();
  if (!root.value->is_object()) r.fail(root, "expected a JSON object");
  r.expect_object(root, {"schema", "geometry", "mode", "msta", "pa", "phantom", "simulation",
                         "imaging", "metrics", "output"});

  const Node schema = r.child(root, "schema");
  if (!schema.present()) r.fail(schema, "missing (expected " + std::to_string(kConfigSchemaVersion) + ")");
  if (r.count(schema, 0) != kConfigSchemaVersion)
    r.fail(schema, "unsupported schema version (expected " +
                       std::to_string(kConfigSchemaVersion) + ")");

  const Node geo = r.child(root, "geometry");
  r.expect_object(geo, {"num_elements", "pitch", "center_frequency", "sampling_frequency",
                        "sound_speed"});
  ArrayGeometry& g = cfg.geometry;
  g.num_elements = r.count(r.child(geo, "num_elements"), g.num_elements);
  if (g.num_elements < 1) r.fail(r.child(geo, "num_elements"), "must be >= 1");
  g.pitch = r.positive(r.child(geo, "pitch"), g.pitch);
  g.center_frequency = r.positive(r.child(geo, "center_frequency"), g.center_frequency);
  g.sampling_frequency = r.positive(r.child(geo, "sampling_frequency"), g.sampling_frequency);
  g.sound_speed = r.positive(r.child(geo, "sound_speed"), g.sound_speed);
  if (g.sampling_frequency < 4.0 * g.center_frequency)
    r.fail(r.child(geo, "sampling_frequency"), "must be >= 4 * center_frequency");

  const Node mode = r.child(root, "mode");
  cfg.mode = r.located(mode, [&] { return parse_sequence_mode(r.text(mode, "sta")); });

  const Node msta = r.child(root, "msta");
  r.expect_object(msta, {"subaperture_size", "stride", "virtual_source_depth"});
  const Node sub = r.child(msta, "subaperture_size");
  cfg.msta.subaperture_size = r.count(sub, cfg.msta.subaperture_size);
  if (cfg.msta.subaperture_size < 1 || cfg.msta.subaperture_size > g.num_elements)
    r.fail(sub, "must be in [1, geometry.num_elements]");
  const Node stride = r.child(msta, "stride");
  cfg.msta.stride = r.count(stride, cfg.msta.stride);
  if (stride.present() && cfg.msta.stride < 1) r.fail(stride, "must be >= 1");
  const Node vsd = r.child(msta, "virtual_source_depth");
  if (vsd.present()) cfg.msta.virtual_source_depth = r.positive(vsd, 0.0);

  const Node pa = r.child(root, "pa");
  r.expect_object(pa, {"focus_depth", "scan", "num_scanlines", "scanlines", "sector_half_angle"});
  cfg.pa.focus_depth = r.positive(r.child(pa, "focus_depth"), cfg.pa.focus_depth);
  const Node scan = r.child(pa, "scan");
  cfg.pa.scan = r.located(scan, [&] { return parse_scan_geometry(r.text(scan, "linear")); });
  const Node nlines = r.child(pa, "num_scanlines");
  cfg.pa.num_scanlines = r.count(nlines, cfg.pa.num_scanlines);
  if (cfg.pa.num_scanlines < 1) r.fail(nlines, "must be >= 1");
  const Node lines = r.child(pa, "scanlines");
  if (lines.present()) {
    if (!lines.value->is_array() || lines.value->empty()) r.fail(lines, "expected a nonempty array");
    std::vector<double> v;
    for (std::size_t i = 0; i < lines.value->size(); ++i) v.push_back(r.real(r.element(lines, i), 0));
    cfg.pa.scanlines = std::move(v);
  }
  const Node half_angle = r.child(pa, "sector_half_angle");
  cfg.pa.sector_half_angle = r.positive(half_angle, cfg.pa.sector_half_angle);
  if (cfg.pa.sector_half_angle >= 1.5) r.fail(half_angle, "must be < 1.5 rad");

  const Node phantom = r.child(root, "phantom");
  r.expect_object(phantom, {"scatterers", "file"});
  if (phantom.present()) {
    cfg.phantom.scatterers.clear();
    const Node scat = r.child(phantom, "scatterers");
    if (scat.present()) {
      if (!scat.value->is_array()) r.fail(scat, "expected an array");
      for (std::size_t i = 0; i < scat.value->size(); ++i) {
        const Node s = r.element(scat, i);
        Scatterer out;
        if (s.value->is_array()) {
          if (s.value->size() != 3) r.fail(s, "expected [x, z, reflectivity]");
          out = {r.real(r.element(s, 0), 0), r.real(r.element(s, 1), 0), r.real(r.element(s, 2), 0)};
        } else {
          r.expect_object(s, {"x", "z", "reflectivity"});
          if (!s.present()) r.fail(s, "expected a scatterer");
          out = {r.real(r.child(s, "x"), 0.0), r.real(r.child(s, "z"), 0.0),
                 r.real(r.child(s, "reflectivity"), 1.0)};
        }
        if (!(out.z > 0.0)) r.fail(s, "scatterer must have z > 0");
        cfg.phantom.scatterers.push_back(out);
      }
    }
    const Node file = r.child(phantom, "file");
    if (file.present()) {
      std::filesystem::path p = r.text(file, "");
      if (p.is_relative()) p = base_dir / p;
      auto more = r.located(file, [&] { return read_phantom_file(p); });
      cfg.phantom.scatterers.insert(cfg.phantom.scatterers.end(), more.begin(), more.end());
    }
    r.located(phantom, [&] {
      cfg.phantom.validate();
      return 0;
    });
  }

  const Node sim = r.child(root, "simulation");
  r.expect_object(sim, {"num_samples", "noise_std", "seed", "fractional_bandwidth"});
  const Node ns = r.child(sim, "num_samples");
  cfg.simulation.num_samples = r.count(ns, cfg.simulation.num_samples);
  if (cfg.simulation.num_samples < 1) r.fail(ns, "must be >= 1");
  const Node noise = r.child(sim, "noise_std");
  cfg.simulation.noise_std = r.real(noise, cfg.simulation.noise_std);
  if (cfg.simulation.noise_std < 0.0) r.fail(noise, "must be >= 0");
  cfg.simulation.seed = r.count(r.child(sim, "seed"), cfg.simulation.seed);
  const Node fb = r.child(sim, "fractional_bandwidth");
  cfg.simulation.fractional_bandwidth = r.positive(fb, cfg.simulation.fractional_bandwidth);
  if (cfg.simulation.fractional_bandwidth >= 2.0) r.fail(fb, "must be < 2");

  const Node img = r.child(root, "imaging");
  r.expect_object(img, {"grid", "apodization", "dynamic_range"});
  const Node grid = r.child(img, "grid");
  r.expect_object(grid, {"x_min", "x_max", "z_min", "z_max", "nx", "nz"});
  ImageGrid& gr = cfg.imaging.grid;
  gr.x_min = r.real(r.child(grid, "x_min"), gr.x_min);
  gr.x_max = r.real(r.child(grid, "x_max"), gr.x_max);
  gr.z_min = r.real(r.child(grid, "z_min"), gr.z_min);
  gr.z_max = r.real(r.child(grid, "z_max"), gr.z_max);
  gr.nx = r.count(r.child(grid, "nx"), gr.nx);
  gr.nz = r.count(r.child(grid, "nz"), gr.nz);
  if (!(gr.x_min < gr.x_max)) r.fail(r.child(grid, "x_max"), "must be > x_min");
  if (!(gr.z_min > 0.0)) r.fail(r.child(grid, "z_min"), "must be > 0");
  if (!(gr.z_min < gr.z_max)) r.fail(r.child(grid, "z_max"), "must be > z_min");
  if (gr.nx < 1) r.fail(r.child(grid, "nx"), "must be >= 1");
  if (gr.nz < 4) r.fail(r.child(grid, "nz"), "must be >= 4 for envelope detection");
  const Node apod = r.child(img, "apodization");
  cfg.imaging.apodization = r.located(apod, [&] { return parse_apodization(r.text(apod, "rect")); });
  cfg.imaging.dynamic_range = r.positive(r.child(img, "dynamic_range"), cfg.imaging.dynamic_range);

  const Node met = r.child(root, "metrics");
  r.expect_object(met, {"signal", "noise", "peak_hint", "bytes_per_sample"});
  const Node sig_node = r.child(met, "signal");
  const Node noise_node = r.child(met, "noise");
  cfg.metrics.signal = read_region(r, sig_node, cfg.metrics.signal);
  cfg.metrics.noise = read_region(r, noise_node, cfg.metrics.noise);
  if (cfg.metrics.signal.overlaps(cfg.metrics.noise))
    r.fail(noise_node, "signal and noise regions must be disjoint");
  r.located(sig_node, [&] { return cfg.metrics.signal.pixels(gr).size(); });
  r.located(noise_node, [&] { return cfg.metrics.noise.pixels(gr).size(); });
  const Node hint = r.child(met, "peak_hint");
  r.expect_object(hint, {"x", "z"});
  if (hint.present())
    cfg.metrics.peak_hint = Vec2{r.real(r.child(hint, "x"), 0.0), r.real(r.child(hint, "z"), 0.0)};
  const Node bps = r.child(met, "bytes_per_sample");
  cfg.metrics.bytes_per_sample = r.count(bps, cfg.metrics.bytes_per_sample);
  if (cfg.metrics.bytes_per_sample < 1) r.fail(bps, "must be >= 1");

  const Node out = r.child(root, "output");
  r.expect_object(out, {"dir"});
  cfg.out_dir = r.text(r.child(out, "dir"), cfg.out_dir);

  // Sequences must build for every mode a command may run.
  r.located(msta, [&] { return build_sequence(cfg, SequenceMode::kMsta).size(); });
  r.located(pa, [&] { return build_sequence(cfg, SequenceMode::kPa).size(); });
  return cfg;
}

std::string mode_key(SequenceMode mode) {
  switch (mode) {
    case SequenceMode::kSta: return "sta";
    case SequenceMode::kMsta: return "msta";
    case SequenceMode::kPa: return "pa";
  }
  return "sta";
}

json region_json(const RegionSpec& r) {
  return {{"x_min", r.x_min}, {"x_max", r.x_max}, {"z_min", r.z_min}, {"z_max", r.z_max}};
}

RunConfig parse_text(std::string_view text, std::string_view origin,
                     const std::filesystem::path& base_dir) {
  json root;
  LineMap lines;
  std::size_t newlines = 0;
  LocatingSax sax(root, &newlines, lines);
  LineCountingIterator first{text.data(), &newlines};
  LineCountingIterator last{text.data() + text.size(), &newlines};
  if (!json::sax_parse(first, last, &sax))
    throw ValidationError(std::string(origin) + ": " + sax.error());
  const Reader reader(root, lines, std::string(origin));
  return parse_document(reader, base_dir);
}

}  // namespace

void RunConfig::validate() const {
  if (schema != kConfigSchemaVersion) throw ValidationError("schema: unsupported version");
  geometry.validate();
  phantom.validate();
  pulse().validate();
  imaging.grid.validate();
  if (imaging.grid.nz < 4) throw ValidationError("imaging.grid.nz: must be >= 4");
  if (!(imaging.dynamic_range > 0.0)) throw ValidationError("imaging.dynamic_range: must be > 0");
  if (simulation.num_samples < 1) throw ValidationError("simulation.num_samples: must be >= 1");
  if (!(simulation.noise_std >= 0.0)) throw ValidationError("simulation.noise_std: must be >= 0");
  if (metrics.signal.overlaps(metrics.noise))
    throw ValidationError("metrics: signal and noise regions must be disjoint");
  metrics.signal.pixels(imaging.grid);
  metrics.noise.pixels(imaging.grid);
  if (metrics.bytes_per_sample < 1) throw ValidationError("metrics.bytes_per_sample: must be >= 1");
  build_sequence(*this, SequenceMode::kMsta);
  build_sequence(*this, SequenceMode::kPa);
}

RunConfig parse_config(std::string_view json_text, std::string_view origin) {
  return parse_text(json_text, origin, std::filesystem::current_path());
}

RunConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return parse_text(text, path.string(), path.parent_path());
}

RunConfig resolved(const RunConfig& config) {
  RunConfig out = config;
  if (out.msta.stride == 0) out.msta.stride = out.msta.subaperture_size;
  if (!out.msta.virtual_source_depth)
    out.msta.virtual_source_depth =
        default_virtual_source_depth(out.geometry, out.msta.subaperture_size);
  if (!out.pa.scanlines) {
    if (out.pa.scan == ScanGeometry::kLinear)
      out.pa.scanlines =
          evenly_spaced(out.imaging.grid.x_min, out.imaging.grid.x_max, out.pa.num_scanlines);
    else
      out.pa.scanlines =
          evenly_spaced(-out.pa.sector_half_angle, out.pa.sector_half_angle, out.pa.num_scanlines);
  }
  out.pa.num_scanlines = out.pa.scanlines->size();
  return out;
}

TransmitSequence build_sequence(const RunConfig& config, SequenceMode mode) {
  const RunConfig cfg = resolved(config);
  switch (mode) {
    case SequenceMode::kSta: return sta_sequence(cfg.geometry);
    case SequenceMode::kMsta:
      return msta_sequence(cfg.geometry, cfg.msta.subaperture_size, cfg.msta.stride,
                           *cfg.msta.virtual_source_depth);
    case SequenceMode::kPa:
      return pa_sequence(cfg.geometry, cfg.pa.focus_depth, *cfg.pa.scanlines, cfg.pa.scan);
  }
  throw ValidationError("unknown mode");
}

std::string effective_config_json(const RunConfig& config) {
  const RunConfig c = resolved(config);
  json scatterers = json::array();
  for (const auto& s : c.phantom.scatterers)
    scatterers.push_back({{"x", s.x}, {"z", s.z}, {"reflectivity", s.reflectivity}});
  json doc = {
      {"schema", c.schema},
      {"geometry",
       {{"num_elements", c.geometry.num_elements},
        {"pitch", c.geometry.pitch},
        {"center_frequency", c.geometry.center_frequency},
        {"sampling_frequency", c.geometry.sampling_frequency},
        {"sound_speed", c.geometry.sound_speed}}},
      {"mode", mode_key(c.mode)},
      {"msta",
       {{"subaperture_size", c.msta.subaperture_size},
        {"stride", c.msta.stride},
        {"virtual_source_depth", *c.msta.virtual_source_depth}}},
      {"pa",
       {{"focus_depth", c.pa.focus_depth},
        {"scan", std::string(to_string(c.pa.scan))},
        {"num_scanlines", c.pa.num_scanlines},
        {"scanlines", *c.pa.scanlines},
        {"sector_half_angle", c.pa.sector_half_angle}}},
      {"phantom", {{"scatterers", scatterers}}},
      {"simulation",
       {{"num_samples", c.simulation.num_samples},
        {"noise_std", c.simulation.noise_std},
        {"seed", c.simulation.seed},
        {"fractional_bandwidth", c.simulation.fractional_bandwidth}}},
      {"imaging",
       {{"grid",
         {{"x_min", c.imaging.grid.x_min},
          {"x_max", c.imaging.grid.x_max},
          {"z_min", c.imaging.grid.z_min},
          {"z_max", c.imaging.grid.z_max},
          {"nx", c.imaging.grid.nx},
          {"nz", c.imaging.grid.nz}}},
        {"apodization", std::string(to_string(c.imaging.apodization))},
        {"dynamic_range", c.imaging.dynamic_range}}},
      {"metrics",
       {{"signal", region_json(c.metrics.signal)},
        {"noise", region_json(c.metrics.noise)},
        {"bytes_per_sample", c.metrics.bytes_per_sample}}},
      {"output", {{"dir", c.out_dir}}},
  };
  if (c.metrics.peak_hint)
    doc["metrics"]["peak_hint"] = {{"x", c.metrics.peak_hint->x}, {"z", c.metrics.peak_hint->z}};
  return doc.dump(2) + "\n";
}

}  // namespace stabeam
