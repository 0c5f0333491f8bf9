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

// Compiled with -mavx2 -mfma. Each routine mirrors its scalar counterpart in
// kernels_scalar.cpp operation for operation.

#include <immintrin.h>

#include <cmath>
#include <numbers>

#include "frameasym/kernels/kernels.hpp"

namespace frameasym::kernels::detail {

namespace {
const double kPiQuarter = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
const double kSqrt2 = std::numbers::sqrt2;

inline __m256d negate(__m256d v) { return _mm256_xor_pd(v, _mm256_set1_pd(-0.0)); }

inline __m256d seed_h0(const double* t, double* lanes) {
  for (int l = 0; l < 4; ++l) lanes[l] = kPiQuarter * std::exp(-0.5 * t[l] * t[l]);
  return _mm256_loadu_pd(lanes);
}
}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d lo = _mm256_setzero_pd();
  __m256d hi = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    lo = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), lo);
    hi = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), hi);
  }
  alignas(32) double s4[4];
  _mm256_store_pd(s4, _mm256_add_pd(lo, hi));
  double s = (s4[0] + s4[1]) + (s4[2] + s4[3]);
  for (; i < n; ++i) s = std::fma(a[i], b[i], s);
  return s;
}

void hermite_block_avx2(const double* t, std::size_t count, int orders, double* out, std::size_t ld) {
  const double* ra = hermite_rec_a();
  const double* rb = hermite_rec_b();
  const __m256d sqrt2 = _mm256_set1_pd(kSqrt2);
  std::size_t i = 0;
  alignas(32) double lanes[4];
  for (; i + 4 <= count; i += 4) {
    const __m256d x = _mm256_loadu_pd(t + i);
    __m256d hp = seed_h0(t + i, lanes);
    _mm256_storeu_pd(out + i, hp);
    if (orders == 1) continue;
    __m256d hn = _mm256_mul_pd(_mm256_mul_pd(sqrt2, x), hp);
    _mm256_storeu_pd(out + ld + i, hn);
    for (int n = 1; n + 1 < orders; ++n) {
      const __m256d a = _mm256_mul_pd(_mm256_set1_pd(ra[n]), x);
      const __m256d bh = _mm256_mul_pd(_mm256_set1_pd(rb[n]), hp);
      const __m256d next = _mm256_fmadd_pd(a, hn, negate(bh));
      hp = hn;
      hn = next;
      _mm256_storeu_pd(out + static_cast<std::size_t>(n + 1) * ld + i, hn);
    }
  }
  for (; i < count; ++i) hermite_block_scalar(t + i, 1, orders, out + i, ld);
}

void hermite_series_avx2(const double* coeffs, int orders, const double* t, std::size_t count,
                         double* out) {
  const double* ra = hermite_rec_a();
  const double* rb = hermite_rec_b();
  const __m256d sqrt2 = _mm256_set1_pd(kSqrt2);
  std::size_t i = 0;
  alignas(32) double lanes[4];
  for (; i + 4 <= count; i += 4) {
    const __m256d x = _mm256_loadu_pd(t + i);
    __m256d hp = seed_h0(t + i, lanes);
    __m256d s = _mm256_mul_pd(_mm256_set1_pd(coeffs[0]), hp);
    if (orders > 1) {
      __m256d hn = _mm256_mul_pd(_mm256_mul_pd(sqrt2, x), hp);
      s = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[1]), hn, s);
      for (int n = 1; n + 1 < orders; ++n) {
        const __m256d a = _mm256_mul_pd(_mm256_set1_pd(ra[n]), x);
        const __m256d bh = _mm256_mul_pd(_mm256_set1_pd(rb[n]), hp);
        const __m256d next = _mm256_fmadd_pd(a, hn, negate(bh));
        hp = hn;
        hn = next;
        s = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[n + 1]), hn, s);
      }
    }
    _mm256_storeu_pd(out + i, s);
  }
  if (i < count) hermite_series_scalar(coeffs, orders, t + i, count - i, out + i);
}

void cubic_eval_avx2(const CubicTable& table, const double* x, std::size_t count, double* out) {
  const double nint_d = static_cast<double>(table.intervals());
  const __m256d x0 = _mm256_set1_pd(table.x0);
  const __m256d inv_dx = _mm256_set1_pd(table.inv_dx);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d nint = _mm256_set1_pd(nint_d);
  const __m256d last = _mm256_set1_pd(nint_d - 1.0);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d u = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), x0), inv_dx);
    const __m256d in = _mm256_and_pd(_mm256_cmp_pd(u, zero, _CMP_GE_OQ), _mm256_cmp_pd(u, nint, _CMP_LE_OQ));
    __m256d fl = _mm256_floor_pd(u);
    fl = _mm256_blendv_pd(fl, last, _mm256_cmp_pd(fl, nint, _CMP_GE_OQ));
    fl = _mm256_and_pd(fl, in);  // out-of-range lanes gather interval 0
    const __m256d s = _mm256_sub_pd(u, fl);
    const __m128i k = _mm256_cvttpd_epi32(fl);
    const __m256d c0 = _mm256_i32gather_pd(table.c0.data(), k, 8);
    const __m256d c1 = _mm256_i32gather_pd(table.c1.data(), k, 8);
    const __m256d c2 = _mm256_i32gather_pd(table.c2.data(), k, 8);
    const __m256d c3 = _mm256_i32gather_pd(table.c3.data(), k, 8);
    __m256d y = _mm256_fmadd_pd(c3, s, c2);
    y = _mm256_fmadd_pd(y, s, c1);
    y = _mm256_fmadd_pd(y, s, c0);
    _mm256_storeu_pd(out + i, _mm256_and_pd(y, in));
  }
  if (i < count) cubic_eval_scalar(table, x + i, count - i, out + i);
}

}  // namespace frameasym::kernels::detail
