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

#include "stabeam/postproc.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>

#include "stabeam/errors.hpp"
#include "stabeam/parallel.hpp"

namespace stabeam {

namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer alloc_complex(std::size_t n) {
  return FftwBuffer(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

// Forward/backward complex plans of one length. FFTW_UNALIGNED keeps the
// chosen codelets independent of buffer alignment, so results are identical
// for every buffer the plan is executed on.
class HilbertPlan {
 public:
  explicit HilbertPlan(std::size_t n) : n_(n) {
    auto in = alloc_complex(n);
    auto out = alloc_complex(n);
    std::lock_guard lock(planner_mutex());
    const int len = static_cast<int>(n);
    forward_ = fftw_plan_dft_1d(len, in.get(), out.get(), FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward_ = fftw_plan_dft_1d(len, in.get(), out.get(), FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  ~HilbertPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  HilbertPlan(const HilbertPlan&) = delete;
  HilbertPlan& operator=(const HilbertPlan&) = delete;

  template <typename T>
  void run(std::span<const T> signal, std::span<double> magnitude) const {
    auto a = alloc_complex(n_);
    auto b = alloc_complex(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      a[i][0] = static_cast<double>(signal[i]);
      a[i][1] = 0.0;
    }
    fftw_execute_dft(forward_, a.get(), b.get());
    // Analytic-signal spectrum: keep DC (and Nyquist for even n), double the
    // positive frequencies, zero the negative ones.
    const std::size_t half = n_ / 2;
    for (std::size_t k = 1; k < n_; ++k) {
      double gain = 0.0;
      if (k < (n_ + 1) / 2) gain = 2.0;
      else if (n_ % 2 == 0 && k == half) gain = 1.0;
      b[k][0] *= gain;
      b[k][1] *= gain;
    }
    fftw_execute_dft(backward_, b.get(), a.get());
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i)
      magnitude[i] = std::hypot(a[i][0], a[i][1]) * scale;
  }

 private:
  std::size_t n_;
  fftw_plan forward_;
  fftw_plan backward_;
};

template <typename T>
std::vector<double> envelope_impl(std::span<const T> signal) {
  if (signal.size() < 4) throw ValidationError("envelope: need at least 4 samples");
  HilbertPlan plan(signal.size());
  std::vector<double> out(signal.size());
  plan.run(signal, std::span<double>(out));
  return out;
}

}  // namespace

std::vector<double> analytic_envelope(std::span<const double> signal) {
  return envelope_impl(signal);
}

std::vector<double> analytic_envelope(std::span<const float> signal) {
  return envelope_impl(signal);
}

Image envelope(const Image& image, std::size_t threads) {
  if (image.kind != ImageKind::kLri && image.kind != ImageKind::kHri &&
      image.kind != ImageKind::kPa)
    throw ValidationError("envelope: input must be an LRI, HRI or PA image");
  const ImageGrid& g = image.grid;
  if (g.nz < 4) throw ValidationError("envelope: nz must be >= 4");
  if (image.values.size() != g.pixel_count())
    throw ValidationError("envelope: value count does not match grid");

  const HilbertPlan plan(g.nz);
  Image out(g, ImageKind::kEnvelope);
  parallel_for(g.nx, threads, [&](std::size_t ix) {
    std::vector<double> column(g.nz);
    std::vector<double> mag(g.nz);
    for (std::size_t iz = 0; iz < g.nz; ++iz) column[iz] = image.at(iz, ix);
    plan.run(std::span<const double>(column), std::span<double>(mag));
    for (std::size_t iz = 0; iz < g.nz; ++iz) out.at(iz, ix) = mag[iz];
  });
  return out;
}

Image log_compress(const Image& envelope_image, double dynamic_range) {
  if (!(std::isfinite(dynamic_range) && dynamic_range > 0.0))
    throw ValidationError("log_compress: dynamic_range must be > 0");
  if (envelope_image.kind != ImageKind::kEnvelope)
    throw ValidationError("log_compress: input must be an envelope image");
  Image out(envelope_image.grid, ImageKind::kDb);
  double peak = 0.0;
  for (double v : envelope_image.values) {
    if (!(v >= 0.0)) throw ValidationError("log_compress: envelope values must be >= 0");
    peak = std::max(peak, v);
  }
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double v = envelope_image.values[i];
    out.values[i] = (peak > 0.0 && v > 0.0)
                        ? std::max(20.0 * std::log10(v / peak), -dynamic_range)
                        : -dynamic_range;
  }
  return out;
}

std::vector<std::uint8_t> gray_levels(const Image& db_image, double dynamic_range) {
  if (!(std::isfinite(dynamic_range) && dynamic_range > 0.0))
    throw ValidationError("gray_levels: dynamic_range must be > 0");
  if (db_image.kind != ImageKind::kDb) throw ValidationError("gray_levels: input must be a dB image");
  std::vector<std::uint8_t> out(db_image.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = std::clamp(db_image.values[i], -dynamic_range, 0.0);
    out[i] = static_cast<std::uint8_t>(std::round(255.0 * (v + dynamic_range) / dynamic_range));
  }
  return out;
}

}  // namespace stabeam
