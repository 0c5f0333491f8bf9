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

#pragma once

// Data-parallel inner loops shared by the special-function, quadrature and
// frame code. Every kernel has a scalar reference implementation and, where
// the build and the CPU allow it, an AVX2/FMA variant. Both variants perform
// the same sequence of correctly rounded operations (explicit fma in the
// scalar code, no implicit contraction), so their outputs are bitwise equal.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace frameasym::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Piecewise cubic on a uniform grid: on interval i with local coordinate
/// s in [0,1], y = ((c3[i] s + c2[i]) s + c1[i]) s + c0[i]. Outside
/// [x0, x0 + intervals/inv_dx] the value is 0.
struct CubicTable {
  double x0 = 0.0;
  double inv_dx = 1.0;
  std::vector<double> c0, c1, c2, c3;

  std::size_t intervals() const { return c0.size(); }

  /// Builds cubic Hermite segments from node values and node derivatives.
  static CubicTable from_hermite(double x0, double dx, std::span<const double> values,
                                 std::span<const double> slopes);
};

struct KernelSet {
  Isa isa;
  /// Sum of a[i]*b[i] with eight interleaved accumulators.
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// out[k*ld + i] = h_k(t[i]) for k < orders (unscaled recurrence).
  void (*hermite_block)(const double* t, std::size_t count, int orders, double* out, std::size_t ld);
  /// out[i] = sum_k coeffs[k] h_k(t[i]) (unscaled recurrence).
  void (*hermite_series)(const double* coeffs, int orders, const double* t, std::size_t count,
                         double* out);
  void (*cubic_eval)(const CubicTable& table, const double* x, std::size_t count, double* out);
};

const KernelSet& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks AVX2+FMA.
const KernelSet* avx2_kernels();

/// Kernel set chosen once per process: AVX2 when available, unless the
/// environment variable FRAMEASYM_SIMD is set to "scalar".
const KernelSet& active();

/// Largest Hermite order the block kernels accept.
inline constexpr int kMaxHermiteOrder = 8192;

/// Recurrence coefficients sqrt(2/(n+1)) and sqrt(n/(n+1)), n < kMaxHermiteOrder.
const double* hermite_rec_a();
const double* hermite_rec_b();

/// Beyond this |t| the seed exp(-t^2/2) is too close to underflow and the
/// span wrappers below switch to the rescaled scalar recurrence.
inline constexpr double kHermiteUnscaledLimit = 26.0;

// Span front ends over active().
double dot(std::span<const double> a, std::span<const double> b);
void hermite_block(std::span<const double> t, int orders, std::span<double> out);
void hermite_series(std::span<const double> coeffs, std::span<const double> t, std::span<double> out);
void cubic_eval(const CubicTable& table, std::span<const double> x, std::span<double> out);

/// h_0..h_{out.size()-1} at one point using a rescaled recurrence that is
/// free of overflow and spurious underflow for any finite t.
void hermite_column_scaled(double t, std::span<double> out);

namespace detail {
void hermite_block_scalar(const double* t, std::size_t count, int orders, double* out, std::size_t ld);
double dot_scalar(const double* a, const double* b, std::size_t n);
void hermite_series_scalar(const double* coeffs, int orders, const double* t, std::size_t count,
                           double* out);
void cubic_eval_scalar(const CubicTable& table, const double* x, std::size_t count, double* out);
#if defined(FRAMEASYM_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
void hermite_block_avx2(const double* t, std::size_t count, int orders, double* out, std::size_t ld);
void hermite_series_avx2(const double* coeffs, int orders, const double* t, std::size_t count,
                         double* out);
void cubic_eval_avx2(const CubicTable& table, const double* x, std::size_t count, double* out);
#endif
}  // namespace detail

}  // namespace frameasym::kernels
