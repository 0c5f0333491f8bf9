// Copyright (c) 2026 The frameasym authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <vector>

#include "frameasym/error.hpp"
#include "frameasym/kernels/kernels.hpp"

namespace frameasym::kernels {

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

CubicTable CubicTable::from_hermite(double x0, double dx, std::span<const double> values,
                                    std::span<const double> slopes) {
  require(values.size() >= 2 && values.size() == slopes.size(), "cubic table needs matching nodes");
  CubicTable tab;
  tab.x0 = x0;
  tab.inv_dx = 1.0 / dx;
  const std::size_t n = values.size() - 1;
  tab.c0.resize(n);
  tab.c1.resize(n);
  tab.c2.resize(n);
  tab.c3.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double y0 = values[i], y1 = values[i + 1];
    const double m0 = slopes[i] * dx, m1 = slopes[i + 1] * dx;
    tab.c0[i] = y0;
    tab.c1[i] = m0;
    tab.c2[i] = 3.0 * (y1 - y0) - 2.0 * m0 - m1;
    tab.c3[i] = 2.0 * (y0 - y1) + m0 + m1;
  }
  return tab;
}

namespace {

struct RecTables {
  std::vector<double> a, b;
  RecTables() : a(kMaxHermiteOrder), b(kMaxHermiteOrder) {
    for (int n = 0; n < kMaxHermiteOrder; ++n) {
      a[n] = std::sqrt(2.0 / (n + 1.0));
      b[n] = std::sqrt(n / (n + 1.0));
    }
  }
};

const RecTables& rec() {
  static const RecTables tables;
  return tables;
}

const KernelSet kScalar{Isa::scalar, detail::dot_scalar, detail::hermite_block_scalar,
                        detail::hermite_series_scalar, detail::cubic_eval_scalar};

#if defined(FRAMEASYM_HAVE_AVX2)
const KernelSet kAvx2{Isa::avx2, detail::dot_avx2, detail::hermite_block_avx2,
                      detail::hermite_series_avx2, detail::cubic_eval_avx2};
#endif

bool force_scalar() {
  const char* env = std::getenv("FRAMEASYM_SIMD");
  return env != nullptr && std::strcmp(env, "scalar") == 0;
}

void check_orders(int orders) {
  require(orders >= 1 && orders <= kMaxHermiteOrder, "Hermite order count out of range");
}

}  // namespace

const double* hermite_rec_a() { return rec().a.data(); }
const double* hermite_rec_b() { return rec().b.data(); }

const KernelSet& scalar_kernels() { return kScalar; }

const KernelSet* avx2_kernels() {
#if defined(FRAMEASYM_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const KernelSet* v = avx2_kernels();
    return (v != nullptr && !force_scalar()) ? v : &kScalar;
  }();
  return *chosen;
}

double dot(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "dot: length mismatch");
  return active().dot(a.data(), b.data(), a.size());
}

void hermite_column_scaled(double t, std::span<double> out) {
  if (out.empty()) return;
  const std::size_t n = out.size();
  // Track h_k = m_k * exp(log_scale); rescale whenever the mantissa grows.
  double log_scale = -0.5 * t * t - 0.25 * std::log(std::numbers::pi);
  double hp = 1.0, hn = std::numbers::sqrt2 * t;
  out[0] = std::exp(log_scale);
  if (n == 1) return;
  out[1] = hn * std::exp(log_scale);
  const double* ra = hermite_rec_a();
  const double* rb = hermite_rec_b();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    double next = ra[k] * t * hn - rb[k] * hp;
    hp = hn;
    hn = next;
    if (std::abs(hn) > 1e200) {
      hp *= 1e-200;
      hn *= 1e-200;
      log_scale += 200.0 * std::numbers::ln10;
    }
    out[k + 1] = hn * std::exp(log_scale);
  }
}

void hermite_block(std::span<const double> t, int orders, std::span<double> out) {
  check_orders(orders);
  const std::size_t count = t.size();
  require(out.size() >= count * static_cast<std::size_t>(orders), "hermite_block: output too small");
  active().hermite_block(t.data(), count, orders, out.data(), count);
  std::vector<double> col;
  for (std::size_t i = 0; i < count; ++i) {
    if (std::abs(t[i]) <= kHermiteUnscaledLimit) continue;
    col.resize(static_cast<std::size_t>(orders));
    hermite_column_scaled(t[i], col);
    for (int k = 0; k < orders; ++k) out[static_cast<std::size_t>(k) * count + i] = col[k];
  }
}

void hermite_series(std::span<const double> coeffs, std::span<const double> t, std::span<double> out) {
  const int orders = static_cast<int>(coeffs.size());
  check_orders(orders);
  require(out.size() >= t.size(), "hermite_series: output too small");
  active().hermite_series(coeffs.data(), orders, t.data(), t.size(), out.data());
  std::vector<double> col;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(t[i]) <= kHermiteUnscaledLimit) continue;
    col.resize(coeffs.size());
    hermite_column_scaled(t[i], col);
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * col[k];
    out[i] = s;
  }
}

void cubic_eval(const CubicTable& table, std::span<const double> x, std::span<double> out) {
  require(out.size() >= x.size(), "cubic_eval: output too small");
  active().cubic_eval(table, x.data(), x.size(), out.data());
}

}  // namespace frameasym::kernels
