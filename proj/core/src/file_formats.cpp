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

#include "stabeam/file_formats.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "stabeam/errors.hpp"
#include "stabeam/postproc.hpp"

namespace stabeam {

namespace {

constexpr std::string_view kDataMarker = "DATA\n";

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Seq, typename Fmt>
std::string join(const Seq& seq, Fmt fmt) {
  std::string out;
  for (const auto& v : seq) {
    if (!out.empty()) out += ',';
    out += fmt(v);
  }
  return out;
}

void append_floats(std::string& out, const auto& values) {
  out.reserve(out.size() + values.size() * 4);
  for (const auto v : values) {
    const float f = static_cast<float>(v);
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    const char bytes[4] = {static_cast<char>(bits & 0xff), static_cast<char>((bits >> 8) & 0xff),
                           static_cast<char>((bits >> 16) & 0xff),
                           static_cast<char>((bits >> 24) & 0xff)};
    out.append(bytes, 4);
  }
}

float float_at(std::string_view data, std::size_t index) {
  const auto* p = reinterpret_cast<const unsigned char*>(data.data()) + index * 4;
  const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                             (static_cast<std::uint32_t>(p[1]) << 8) |
                             (static_cast<std::uint32_t>(p[2]) << 16) |
                             (static_cast<std::uint32_t>(p[3]) << 24);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

// Parsed text header of a STARF1/STAIM1 payload.
struct Header {
  std::vector<std::pair<std::string, std::string>> entries;
  std::map<std::string, std::string, std::less<>> lookup;
  std::string_view data;

  const std::string& get(std::string_view key) const {
    auto it = lookup.find(key);
    if (it == lookup.end()) throw ValidationError("missing header key '" + std::string(key) + "'");
    return it->second;
  }
  bool has(std::string_view key) const { return lookup.find(key) != lookup.end(); }
};

Header parse_header(std::string_view bytes, std::string_view magic) {
  Header h;
  std::size_t pos = 0;
  auto next_line = [&]() -> std::string_view {
    const std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) throw ValidationError("truncated header (no DATA section)");
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    return line;
  };
  if (next_line() != magic)
    throw ValidationError("bad magic: expected '" + std::string(magic) + "'");
  for (;;) {
    const std::string_view line = next_line();
    if (line == kDataMarker.substr(0, 4)) break;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ValidationError("malformed header line '" + std::string(line) + "'");
    std::string key(line.substr(0, eq));
    std::string value(line.substr(eq + 1));
    if (h.lookup.count(key)) throw ValidationError("duplicate header key '" + key + "'");
    h.lookup.emplace(key, value);
    h.entries.emplace_back(std::move(key), std::move(value));
  }
  h.data = bytes.substr(pos);
  return h;
}

double parse_real(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("invalid number '" + std::string(text) + "'");
  return v;
}

std::uint64_t parse_count(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("invalid integer '" + std::string(text) + "'");
  return v;
}

template <typename Parse>
auto parse_list(std::string_view text, Parse parse) {
  std::vector<decltype(parse(text))> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_reals(std::string_view text, std::size_t expected_count,
                                std::string_view what) {
  auto v = parse_list(text, parse_real);
  if (v.size() != expected_count)
    throw ValidationError(std::string(what) + ": expected " + std::to_string(expected_count) +
                          " values");
  return v;
}

}  // namespace

std::string encode_rf(const RfDataSet& rf) {
  std::ostringstream h;
  h << "STARF1\n";
  h << "num_elements=" << rf.geometry.num_elements << '\n';
  h << "pitch=" << fmt_real(rf.geometry.pitch) << '\n';
  h << "center_frequency=" << fmt_real(rf.geometry.center_frequency) << '\n';
  h << "sampling_frequency=" << fmt_real(rf.geometry.sampling_frequency) << '\n';
  h << "sound_speed=" << fmt_real(rf.geometry.sound_speed) << '\n';
  h << "fractional_bandwidth=" << fmt_real(rf.pulse.fractional_bandwidth) << '\n';
  h << "mode=" << to_string(rf.sequence.mode) << '\n';
  h << "scan=" << to_string(rf.sequence.scan) << '\n';
  h << "scanlines=" << join(rf.sequence.scanlines, fmt_real) << '\n';
  h << "num_emissions=" << rf.num_emissions() << '\n';
  h << "num_channels=" << rf.num_channels() << '\n';
  h << "num_samples=" << rf.num_samples << '\n';
  h << "noise_std=" << fmt_real(rf.noise_std) << '\n';
  h << "seed=" << rf.seed << '\n';
  for (std::size_t e = 0; e < rf.num_emissions(); ++e) {
    const TransmitEvent& ev = rf.sequence.events[e];
    const std::string p = "event." + std::to_string(e) + ".";
    h << p << "label=" << to_string(ev.label) << '\n';
    h << p << "elements="
      << join(ev.active_elements, [](std::size_t i) { return std::to_string(i); }) << '\n';
    h << p << "delays=" << join(ev.delays, fmt_real) << '\n';
    h << p << "apodization=" << join(ev.apodization, fmt_real) << '\n';
    if (ev.virtual_source) {
      const auto& v = *ev.virtual_source;
      h << p << "virtual_source=" << fmt_real(v.position.x) << ',' << fmt_real(v.position.z) << ','
        << fmt_real(v.depth) << ',' << fmt_real(v.normalization_offset) << '\n';
    }
    if (ev.focal_line) {
      const auto& f = *ev.focal_line;
      h << p << "focal_line=" << fmt_real(f.origin.x) << ',' << fmt_real(f.origin.z) << ','
        << fmt_real(f.direction.x) << ',' << fmt_real(f.direction.z) << ','
        << fmt_real(f.focus_range) << ',' << fmt_real(f.reference_time) << '\n';
    }
  }
  h << kDataMarker;
  std::string out = h.str();
  append_floats(out, rf.samples);
  return out;
}

RfDataSet decode_rf(std::string_view bytes) {
  const Header h = parse_header(bytes, "STARF1");
  RfDataSet rf;
  rf.geometry.num_elements = parse_count(h.get("num_elements"));
  rf.geometry.pitch = parse_real(h.get("pitch"));
  rf.geometry.center_frequency = parse_real(h.get("center_frequency"));
  rf.geometry.sampling_frequency = parse_real(h.get("sampling_frequency"));
  rf.geometry.sound_speed = parse_real(h.get("sound_speed"));
  rf.pulse.center_frequency = rf.geometry.center_frequency;
  rf.pulse.fractional_bandwidth = parse_real(h.get("fractional_bandwidth"));
  rf.sequence.mode = parse_sequence_mode(h.get("mode"));
  rf.sequence.scan = parse_scan_geometry(h.get("scan"));
  rf.sequence.scanlines = parse_list(h.get("scanlines"), parse_real);
  const std::size_t emissions = parse_count(h.get("num_emissions"));
  if (parse_count(h.get("num_channels")) != rf.geometry.num_elements)
    throw ValidationError("STARF1: num_channels does not match num_elements");
  rf.num_samples = parse_count(h.get("num_samples"));
  rf.noise_std = parse_real(h.get("noise_std"));
  rf.seed = parse_count(h.get("seed"));

  for (std::size_t e = 0; e < emissions; ++e) {
    const std::string p = "event." + std::to_string(e) + ".";
    TransmitEvent ev;
    ev.label = parse_event_label(h.get(p + "label"));
    ev.active_elements = parse_list(h.get(p + "elements"), [](std::string_view s) {
      return static_cast<std::size_t>(parse_count(s));
    });
    ev.delays = parse_reals(h.get(p + "delays"), ev.active_elements.size(), p + "delays");
    ev.apodization =
        parse_reals(h.get(p + "apodization"), ev.active_elements.size(), p + "apodization");
    if (h.has(p + "virtual_source")) {
      const auto v = parse_reals(h.get(p + "virtual_source"), 4, p + "virtual_source");
      ev.virtual_source = VirtualSource{{v[0], v[1]}, v[2], v[3]};
    }
    if (h.has(p + "focal_line")) {
      const auto f = parse_reals(h.get(p + "focal_line"), 6, p + "focal_line");
      ev.focal_line = FocalLine{{f[0], f[1]}, {f[2], f[3]}, f[4], f[5]};
    }
    rf.sequence.events.push_back(std::move(ev));
  }

  std::size_t count = 0;
  if (__builtin_mul_overflow(emissions, rf.geometry.num_elements, &count) ||
      __builtin_mul_overflow(count, rf.num_samples, &count) || count > h.data.size() / 4 ||
      h.data.size() != count * 4)
    throw ValidationError("STARF1: DATA section holds " + std::to_string(h.data.size()) +
                          " bytes, header implies " + std::to_string(count * 4));
  rf.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) rf.samples[i] = float_at(h.data, i);
  rf.validate();
  return rf;
}

std::string encode_image(const Image& image, const Metadata& extra) {
  std::ostringstream h;
  const ImageGrid& g = image.grid;
  h << "STAIM1\n";
  h << "kind=" << to_string(image.kind) << '\n';
  h << "x_min=" << fmt_real(g.x_min) << '\n';
  h << "x_max=" << fmt_real(g.x_max) << '\n';
  h << "z_min=" << fmt_real(g.z_min) << '\n';
  h << "z_max=" << fmt_real(g.z_max) << '\n';
  h << "nx=" << g.nx << '\n';
  h << "nz=" << g.nz << '\n';
  for (const auto& [key, value] : extra) {
    if (key.find_first_of("=\n") != std::string::npos || value.find('\n') != std::string::npos)
      throw ValidationError("STAIM1: metadata key/value contains a reserved character");
    h << key << '=' << value << '\n';
  }
  h << kDataMarker;
  std::string out = h.str();
  append_floats(out, image.values);
  return out;
}

std::optional<std::string> ImageFile::find(std::string_view key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return std::nullopt;
}

ImageFile decode_image(std::string_view bytes) {
  const Header h = parse_header(bytes, "STAIM1");
  ImageFile file;
  ImageGrid g;
  g.x_min = parse_real(h.get("x_min"));
  g.x_max = parse_real(h.get("x_max"));
  g.z_min = parse_real(h.get("z_min"));
  g.z_max = parse_real(h.get("z_max"));
  g.nx = parse_count(h.get("nx"));
  g.nz = parse_count(h.get("nz"));
  g.validate();
  if (g.nx > h.data.size() / 4 || g.nz > h.data.size() / 4 / g.nx ||
      h.data.size() != g.pixel_count() * 4)
    throw ValidationError("STAIM1: DATA section size does not match nx * nz");
  file.image = Image(g, parse_image_kind(h.get("kind")));
  for (const auto& entry : h.entries) {
    static constexpr std::string_view reserved[] = {"kind",  "x_min", "x_max", "z_min",
                                                    "z_max", "nx",    "nz"};
    if (std::find(std::begin(reserved), std::end(reserved), entry.first) == std::end(reserved))
      file.metadata.push_back(entry);
  }

  for (std::size_t i = 0; i < g.pixel_count(); ++i) file.image.values[i] = float_at(h.data, i);
  return file;
}

std::string encode_pgm(const Image& db_image, double dynamic_range) {
  if (db_image.kind != ImageKind::kDb) throw ValidationError("PGM export needs a DB image");
  std::string out = "P5\n" + std::to_string(db_image.grid.nx) + " " +
                    std::to_string(db_image.grid.nz) + "\n255\n";
  const auto levels = gray_levels(db_image, dynamic_range);
  out.append(reinterpret_cast<const char*>(levels.data()), levels.size());
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return bytes;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace stabeam
