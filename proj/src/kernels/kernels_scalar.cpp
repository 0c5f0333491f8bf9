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
#include <numbers>

#include "frameasym/kernels/kernels.hpp"

namespace frameasym::kernels::detail {

namespace {
const double kPiQuarter = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
const double kSqrt2 = std::numbers::sqrt2;
}  // namespace

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    for (int l = 0; l < 8; ++l) acc[l] = std::fma(a[i + l], b[i + l], acc[l]);
  // Same reduction tree as the vector variant.
  double lo[4], hi[4];
  for (int l = 0; l < 4; ++l) {
    lo[l] = acc[l];
    hi[l] = acc[l + 4];
  }
  double s4[4];
  for (int l = 0; l < 4; ++l) s4[l] = lo[l] + hi[l];
  double s = (s4[0] + s4[1]) + (s4[2] + s4[3]);
  for (; i < n; ++i) s = std::fma(a[i], b[i], s);
  return s;
}

void hermite_block_scalar(const double* t, std::size_t count, int orders, double* out, std::size_t ld) {
  const double* ra = hermite_rec_a();
  const double* rb = hermite_rec_b();
  for (std::size_t i = 0; i < count; ++i) {
    const double x = t[i];
    double hp = kPiQuarter * std::exp(-0.5 * x * x);
    out[i] = hp;
    if (orders == 1) continue;
    double hn = (kSqrt2 * x) * hp;
    out[ld + i] = hn;
    for (int n = 1; n + 1 < orders; ++n) {
      const double next = std::fma(ra[n] * x, hn, -(rb[n] * hp));
      hp = hn;
      hn = next;
      out[static_cast<std::size_t>(n + 1) * ld + i] = hn;
    }
  }
}

void hermite_series_scalar(const double* coeffs, int orders, const double* t, std::size_t count,
                           double* out) {
  const double* ra = hermite_rec_a();
  const double* rb = hermite_rec_b();
  for (std::size_t i = 0; i < count; ++i) {
    const double x = t[i];
    double hp = kPiQuarter * std::exp(-0.5 * x * x);
    double s = coeffs[0] * hp;
    if (orders > 1) {
      double hn = (kSqrt2 * x) * hp;
      s = std::fma(coeffs[1], hn, s);
      for (int n = 1; n + 1 < orders; ++n) {
        const double next = std::fma(ra[n] * x, hn, -(rb[n] * hp));
        hp = hn;
        hn = next;
        s = std::fma(coeffs[n + 1], hn, s);
      }
    }
    out[i] = s;
  }
}

void cubic_eval_scalar(const CubicTable& table, const double* x, std::size_t count, double* out) {
  const double nint = static_cast<double>(table.intervals());
  for (std::size_t i = 0; i < count; ++i) {
    const double u = (x[i] - table.x0) * table.inv_dx;
    if (!(u >= 0.0 && u <= nint)) {
      out[i] = 0.0;
      continue;
    }
    double fl = std::floor(u);
    if (fl >= nint) fl = nint - 1.0;
    const std::size_t k = static_cast<std::size_t>(fl);
    const double s = u - fl;
    out[i] = std::fma(std::fma(std::fma(table.c3[k], s, table.c2[k]), s, table.c1[k]), s, table.c0[k]);
  }
}

}  // namespace frameasym::kernels::detail
