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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "frameasym/distributions/distribution.hpp"

namespace frameasym::frames {

/// Time-frequency shifts e^{2 pi i m beta t} w(t - n alpha), |n| <= n_max, |m| <= m_max.
struct GaborSystem {
  TestFunction window = TestFunction::gaussian_window();
  double alpha = 0.5;
  double beta = 0.5;
  int n_max = 16;
  int m_max = 16;
};

/// Meyer wavelets 2^{m/2} psi(2^m x - n), m_min <= m <= m_max, |n| <= n_max.
/// With `scaling_closure`, the scaling functions at level m_min complete the
/// system to an orthonormal basis of the coarse-scale space as well.
struct WaveletSystem {
  int m_min = -8;
  int m_max = 8;
  int n_max = 128;
  bool scaling_closure = false;
};

/// Frame elements e_n = sum_j M(n-1, j) h_j, n = 1..rows (1-based
/// element index, 0-based Hermite index).
struct HermiteFrame {
  Eigen::MatrixXd M;
  int bandwidth = 0;

  static HermiteFrame identity(int n);
  /// Banded matrix: unit diagonal plus off-diagonal entries drawn
  /// uniformly from [-0.25/bandwidth, 0.25/bandwidth].
  static HermiteFrame banded_random(int n, int bandwidth, std::uint64_t seed);
  /// Each h_j / sqrt(2) listed twice: a tight frame with bound 1.
  static HermiteFrame duplicated_tight(int n);
};

using FrameSystem = std::variant<GaborSystem, WaveletSystem, HermiteFrame>;

std::string_view system_name(const FrameSystem& F);

TestFunction gabor_element(const GaborSystem& G, int n, int m);
TestFunction wavelet_element(int m, int n);
TestFunction scaling_element(int m, int n);

/// Coefficient array with a fixed index order.
struct CoeffGrid {
  std::string system;
  std::string index1_name, index2_name;
  std::vector<std::array<int, 2>> indices;
  std::vector<cplx> values;
  double scale = 1.0;
  Regime regime = Regime::origin;
  /// Scaling-function coefficients at level closure_level (wavelet systems
  /// with closure only), indexed by n in closure_n.
  int closure_level = 0;
  std::vector<int> closure_n;
  std::vector<cplx> closure_values;

  std::size_t size() const { return values.size(); }
  /// Position of an index pair, or -1.
  long find(int i1, int i2) const;
  cplx at(int i1, int i2) const;
  /// CSV with header index1,index2,scale,re,im (shortest round-trip numbers).
  std::string to_csv() const;
};

/// V_w f(x, xi) = <f, conj(w(. - x)) e^{-2 pi i xi .}>.
cplx stft(const Distribution& f, const TestFunction& w, double x, double xi, const PairOptions& opt = {});

/// Grid of V_w f(alpha n, beta m), n-major.
CoeffGrid gabor_coeffs(const Distribution& f, const GaborSystem& G, const PairOptions& opt = {});
/// Same for a scaled/shifted distribution.
CoeffGrid gabor_coeffs(const ScaledDistribution& s, const GaborSystem& G, const PairOptions& opt = {});

/// c_{m,n} = <f(x0 + eps .), conj(psi_{m,n})>, m-major. In the infinity
/// regime `eps` is the dilation lambda and x0 is ignored.
CoeffGrid wavelet_coeffs(const Distribution& f, const WaveletSystem& W, double eps, double x0,
                         Regime regime = Regime::origin, const PairOptions& opt = {});

/// <f(scaled), e_n> = sum_j M(n-1, j) <f(scaled), h_j> in increasing j.
CoeffGrid hermite_frame_coeffs(const Distribution& f, const HermiteFrame& F, double eps, double x0,
                               Regime regime = Regime::origin, const PairOptions& opt = {});

/// Dispatches on the system.
CoeffGrid frame_coeffs(const ScaledDistribution& s, const FrameSystem& F, const PairOptions& opt = {});

struct FrameBoundsReport {
  double A = 0.0;
  double B = 0.0;
  int truncation = 0;
  /// Dimension of the reference space the frame operator was compressed to.
  int reference_dim = 0;
  int elements = 0;
  /// Same quantities at truncation/2 (0 when not computed).
  double A_half = 0.0;
  double B_half = 0.0;
  /// max(|A - A_half|/A, |B - B_half|/B)
  double change_vs_half = 0.0;
};

/// Extreme eigenvalues of the finite-section frame operator. Truncation N:
/// Hermite frames use the first N Hermite coordinates; Gabor systems the
/// box |n|, |m| <= N compressed onto N-adapted time-frequency Hermite
/// functions; wavelet systems the box |n| <= N within the scale range.
/// Throws SingularSection when the lower bound is numerically zero.
FrameBoundsReport frame_bounds(const FrameSystem& F, int N, bool with_half = true);

/// Synthesized function: a (dual-)frame expansion evaluable at points.
class Reconstruction {
 public:
  using Eval = std::function<void(std::span<const double>, std::span<cplx>)>;
  Reconstruction() = default;
  Reconstruction(Eval eval, std::pair<double, double> support, std::string label);
  cplx operator()(double t) const;
  void eval_batch(std::span<const double> t, std::span<cplx> out) const;
  std::pair<double, double> support() const { return support_; }
  /// As a regular tempered distribution (bounded support metadata is not
  /// imposed; pairing integrates over the test-function support).
  Distribution as_distribution() const;
  /// Hermite coordinates when the expansion is a finite Hermite series.
  std::vector<cplx> hermite_coefficients;

 private:
  Eval eval_;
  std::pair<double, double> support_{0.0, 0.0};
  std::string label_;
};

/// Applies the canonical dual frame to `coeffs`: orthonormal synthesis for
/// wavelets (plus the scaling closure when present), S^{-1} T^* c on the
/// reference subspace otherwise.
Reconstruction dual_frame_apply(const FrameSystem& F, const CoeffGrid& coeffs);

struct LocalizationFit {
  /// Largest gamma in the grid with C(gamma) <= ceiling; +inf when the
  /// cross-Gramian has no off-diagonal mass, -1 when none qualifies.
  double gamma_fit = 0.0;
  double C_fit = 0.0;
  std::vector<double> gammas;
  std::vector<double> C;
  int rows = 0;
  int cols = 0;
};

/// Cross-Gramian G(r, j) of a family against the Hermite basis together
/// with the nominal diagonal position of each row.
struct CrossGramian {
  Eigen::MatrixXcd G;
  std::vector<double> nominal;
};

CrossGramian cross_gramian(const HermiteFrame& F);
/// Gabor box vs time-frequency Hermite functions H_j(t) = (2 pi)^{1/4}
/// h_j(sqrt(2 pi) t), j < cols; row (n, m) sits nominally at
/// pi((n alpha)^2 + (m beta)^2) - 1/2.
CrossGramian cross_gramian(const GaborSystem& G, int cols);

std::vector<double> default_gamma_grid();

LocalizationFit localization_decay(const CrossGramian& X, const std::vector<double>& gamma_grid,
                                   double ceiling = 1e3, double zero_tol = 1e-13);

/// Uniform double in [0, 1) from a 64-bit engine, (x >> 11) * 2^-53.
double uniform01(std::uint64_t x);

}  // namespace frameasym::frames
