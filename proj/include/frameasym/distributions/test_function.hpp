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

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>

namespace frameasym {

using cplx = std::complex<double>;

enum class TestClass { S, S0, K1 };

std::string_view test_class_name(TestClass c);

enum class BaseKind { gaussian, hermite, meyer_wavelet, meyer_scaling, custom };

/// User-supplied base function. Derivatives above `max_derivative` of the
/// analytic `derivative` callback fall back to central differences (orders
/// up to 2); beyond that DerivativeUnavailable is raised.
struct CustomBase {
  std::function<cplx(double)> value;
  std::function<cplx(int, double)> derivative;  // optional
  int max_derivative = 0;
  TestClass tag = TestClass::S;
  double support_lo = -10.0;
  double support_hi = 10.0;
  bool real = true;
  std::string label = "custom";
};

/// Smooth test function in the normal form
///   psi(t) = amp * exp(2 pi i nu t) * B(a t + b)
/// with B a built-in or custom base (possibly conjugated). The family is
/// closed under affine changes of variable, modulation, scaling and
/// conjugation, which is all the frame and scaling calculus needs.
class TestFunction {
 public:
  /// Unit-norm Gaussian 2^{1/4} e^{-pi t^2}.
  static TestFunction gaussian_window();
  /// e^{-(t-center)^2 / (2 sigma^2)}.
  static TestFunction gaussian(double center, double sigma);
  /// Orthonormal Hermite function h_n (0-based).
  static TestFunction hermite(int n);
  static TestFunction meyer_wavelet();
  static TestFunction meyer_scaling();
  static TestFunction custom(CustomBase base);

  cplx operator()(double t) const { return eval(t); }
  cplx eval(double t) const;
  void eval_batch(std::span<const double> t, std::span<cplx> out) const;
  /// k-th derivative; throws DerivativeUnavailable when not supported.
  cplx derivative(int k, double t) const;

  /// t -> c * psi(a t + b); a != 0.
  TestFunction affine(double a, double b, cplx c = 1.0) const;
  /// t -> e^{2 pi i mu t} psi(t).
  TestFunction modulated(double mu) const;
  TestFunction conjugated() const;
  TestFunction scaled(cplx c) const;

  TestClass class_tag() const;
  BaseKind base_kind() const;
  int hermite_order() const { return hermite_n_; }
  /// Interval outside of which |psi| is negligible.
  std::pair<double, double> support() const;
  /// Radius r such that the Fourier transform vanishes on (-r, r); 0 when
  /// there is no such gap.
  double spectral_gap() const;
  /// Highest derivative order available (large for analytic built-ins).
  int max_derivative() const;
  bool is_real() const;
  /// Fourier transform, available for the Meyer bases and the Gaussian.
  bool has_fourier() const;
  cplx fourier(double xi) const;
  /// Frequency interval(s) carrying the transform: for the wavelet two
  /// bands mirrored about the modulation, otherwise one.
  std::vector<std::pair<double, double>> fourier_support() const;

  // Normal-form parameters.
  cplx amplitude() const { return amp_; }
  double modulation() const { return nu_; }
  double dilation() const { return a_; }
  double offset() const { return b_; }
  bool conjugated_base() const { return conj_; }

  std::string describe() const;

 private:
  struct Base;
  std::shared_ptr<const Base> base_;
  BaseKind kind_ = BaseKind::gaussian;
  int hermite_n_ = 0;
  cplx amp_{1.0, 0.0};
  double nu_ = 0.0;
  double a_ = 1.0;
  double b_ = 0.0;
  bool conj_ = false;

  cplx base_derivative(int k, double u) const;
  void base_batch(std::span<const double> u, std::span<cplx> out) const;
};

}  // namespace frameasym
