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

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frameasym/distributions/distribution.hpp"
#include "frameasym/frames/frames.hpp"

namespace frameasym::asymptotics {

using frames::CoeffGrid;
using frames::FrameSystem;

/// L(t) = c * prod |log t|^{beta_i}, slowly varying at the origin or at
/// infinity. Log-power factors are only used inside the validity interval
/// (0, bound] (origin) or [bound, inf) (infinity).
struct SlowlyVarying {
  struct Factor {
    enum class Kind { constant, log_power } kind = Kind::constant;
    double value = 1.0;
  };
  std::vector<Factor> factors;
  Regime regime = Regime::origin;
  double bound = 0.5;

  static SlowlyVarying constant(double c = 1.0, Regime regime = Regime::origin);
  static SlowlyVarying log_power(double beta, Regime regime);
  static SlowlyVarying product(const SlowlyVarying& a, const SlowlyVarying& b);

  double operator()(double t) const;
  /// log L(e^{u}); usable far outside the double range of e^u.
  double log_at_log(double u) const;
  bool valid_at(double t) const;
  /// Total exponent of |log t| over all factors.
  double log_exponent() const;
  double constant_factor() const;
  /// Checks L(a t)/L(t) -> 1 for a in {0.5, 2, 10} within 1% at deep
  /// probe points of the regime.
  bool verify(std::string* why = nullptr) const;
  std::string describe() const;
};

/// Geometric scale ladder: eps_j = base^{-j} (origin) or lambda_j = base^j
/// (infinity), j = j_min..j_max; the last rung is closest to the limit.
struct Ladder {
  double base = 2.0;
  int j_min = 2;
  int j_max = 12;
  Regime regime = Regime::origin;
  std::vector<double> explicit_scales;

  std::vector<double> scales() const;
};

struct QuasiAsymptoticsModel {
  double alpha = 0.0;
  SlowlyVarying L;
  double center = 0.0;
  bool at_infinity = false;
  Distribution g;
};

struct SAsymptoticsModel {
  double b = 0.0;
  cplx C = 0.0;
  SlowlyVarying L = SlowlyVarying::constant(1.0, Regime::infinity);

  /// c(h) = e^{bh} L(e^h)
  double c(double h) const;
  /// g(x) = C e^{bx}
  Distribution g() const;
};

struct LimitTable {
  std::string index1_name = "index1";
  std::string index2_name = "index2";
  std::vector<std::array<int, 2>> indices;
  std::vector<cplx> limits;
  std::vector<double> last_change;
  std::vector<char> convergent;
  std::vector<double> scales;
  /// Normalized ratios per index, one entry per rung.
  std::vector<std::vector<cplx>> ratios;

  std::size_t size() const { return indices.size(); }
  bool all_convergent() const;
  std::size_t convergent_count() const;
  long find(int i1, int i2) const;
  /// index1,index2,re,im,last_change,convergent
  std::string to_csv() const;
  /// index1,index2,scale,re,im over the ratio ladder
  std::string ratios_csv() const;
};

/// residual_tol bounds the RMS regression residual in log units.
struct DegreeOptions {
  double residual_tol = 5e-3;
  double dispersion_tol = 1e-2;
};

struct DegreeEstimate {
  double alpha = 0.0;
  double intercept = 0.0;
  /// RMS regression residual at the reference index.
  double residual = 0.0;
  /// max |alpha_k - alpha| over the cross-validation indices.
  double dispersion = 0.0;
  std::array<int, 2> reference{0, 0};
  std::vector<std::array<int, 2>> cross_indices;
  std::vector<double> cross_alphas;
  int rungs_used = 0;
};

/// Slope of log|c(s)| - log L(s) against log s over the final half of the
/// ladder. Throws AllCoefficientsVanishing or NonPowerLawBehavior.
DegreeEstimate estimate_degree(const std::vector<CoeffGrid>& grids, const SlowlyVarying& L,
                               const DegreeOptions& opt = {});
/// Same regression without the threshold checks.
DegreeEstimate fit_degree(const std::vector<CoeffGrid>& grids, const SlowlyVarying& L);
/// Chooses among Constant and LogPower{beta}, beta in [-3, 3] step 1/4, by
/// smallest regression residual (ties: smaller |beta|).
SlowlyVarying select_slowly_varying(const std::vector<CoeffGrid>& grids, Regime regime);

struct LimitOptions {
  double tol = 1e-4;
  int min_rungs = 6;
  /// Changes are measured relative to max(|r|, floor * max_k |r_k|).
  double floor = 1e-8;
};

LimitTable condition_i_limits(const std::vector<CoeffGrid>& grids, double alpha, const SlowlyVarying& L,
                              const LimitOptions& opt = {});

enum class BoundFamily { wavelet, localized, gabor };
std::string_view family_name(BoundFamily f);

struct BoundWitness {
  std::array<int, 2> index{0, 0};
  double scale = 0.0;
  double ratio = 0.0;
  /// Normalized ratios of the witness index along the ladder.
  std::vector<double> ladder;
};

struct TauberianBoundFit {
  BoundFamily family = BoundFamily::wavelet;
  std::vector<std::string> exponent_names;
  std::vector<double> exponents;
  double C = 0.0;
  /// Largest eps (origin), smallest lambda (infinity) or smallest x (gabor).
  double threshold = 0.0;
  bool bounded = true;
  /// C(full box) / C(half box) - 1 at the reported exponents.
  double growth = 0.0;
  /// The optimum sits on the edge of the exponent search range.
  bool boundary_hit = false;
  std::optional<BoundWitness> witness;
};

struct BoundOptions {
  double growth_tol = 0.1;
};

/// Grid search for the smallest weight exponents making
/// max |c| / (norm(s) weight(index)) stable when the index box and the ladder
/// are doubled. norm(s) = s^alpha L(s), or e^{alpha s} L(e^s) for gabor
/// (alpha plays the role of the rate b).
TauberianBoundFit condition_ii_bound(const std::vector<CoeffGrid>& grids, double alpha, const SlowlyVarying& L,
                                     BoundFamily family, const BoundOptions& opt = {});

BoundFamily family_for(const FrameSystem& F);

/// g synthesized from the limit coefficients by the canonical dual frame.
Distribution synthesize_limit(const FrameSystem& F, const LimitTable& table);
/// As above, also returning the expansion.
frames::Reconstruction synthesize_reconstruction(const FrameSystem& F, const LimitTable& table);

/// Predicted limit coefficients c(g) over the system's index box.
LimitTable abelian_predict(const QuasiAsymptoticsModel& model, const FrameSystem& F, const PairOptions& opt = {});

/// max_k |a_k - b_k| / (1 + |b_k|) over common indices.
double abelian_residual(const LimitTable& limits, const LimitTable& predicted);

struct SAsymResult {
  SAsymptoticsModel model;
  LimitTable table;
  TauberianBoundFit bound;
  /// C * conj(w^(-beta m + i b/(2 pi))) per m in table order.
  std::vector<cplx> predicted;
  /// sqrt(sum |a_m - pred_m|^2 / sum |a_m|^2)
  double c_residual = 0.0;
  std::vector<double> tail_slopes;
  bool degenerate_zero = false;
  std::vector<CoeffGrid> grids;
};

struct SAsymOptions {
  LimitOptions limit;
  BoundOptions bound;
  double slope_tol = 1e-3;
  double c_tol = 1e-3;
  PairOptions pair;
};

/// Continuation of the window transform to complex frequency,
/// int w(t) e^{-2 pi i zeta t} dt.
cplx window_transform(const TestFunction& w, cplx zeta);

/// S-asymptotics from the STFT along x -> inf. Throws NonExponentialScaling
/// or InconsistentAm; identically zero ladders return the degenerate model.
SAsymResult s_asym_estimate(const Distribution& f, const frames::GaborSystem& G, const std::vector<double>& x_ladder,
                            const SlowlyVarying& L, const SAsymOptions& opt = {});

struct MonotoneResult {
  double limit = 0.0;
  double a0 = 0.0;
  double window_integral = 0.0;
  double direct_ratio = 0.0;
  /// |limit - direct_ratio| / max(|limit|, |direct_ratio|), or 0 when both vanish
  double agreement = 0.0;
  std::vector<double> a0_ladder;
};

/// Predicted lim f(x)/(e^{bx} L(e^x)) = a0 / int w(t) e^{bt} dt for a
/// non-decreasing f >= 0 on [0, inf) and a non-negative window w.
MonotoneResult monotone_tauberian(const std::function<double(double)>& f, const TestFunction& w, double b,
                                  const SlowlyVarying& L, const std::vector<double>& x_ladder);

enum class Verdict { certified, certified_trivial, not_certified };
std::string_view verdict_name(Verdict v);

struct ProbeCheck {
  std::string probe;
  cplx synthesized = 0.0;
  cplx expected = 0.0;
  double rel_error = 0.0;
};

struct PipelineConfig {
  Ladder ladder;
  /// nullopt selects L automatically.
  std::optional<SlowlyVarying> L;
  double x0 = 0.0;
  /// STFT positions for Gabor systems.
  std::vector<double> x_ladder{2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
  DegreeOptions degree;
  LimitOptions limit;
  BoundOptions bound;
  double abelian_tol = 1e-3;
  SAsymOptions s_asym;
  PairOptions pair;
};

struct AsymptoticsReport {
  std::string frame;
  Regime regime = Regime::origin;
  std::vector<double> scales;
  std::variant<QuasiAsymptoticsModel, SAsymptoticsModel> model;
  SlowlyVarying L;
  std::optional<DegreeEstimate> degree;
  LimitTable limits;
  std::optional<LimitTable> abelian;
  double abelian_residual = 0.0;
  TauberianBoundFit bound;
  std::vector<ProbeCheck> synthesis;
  double synthesis_error = 0.0;
  std::optional<SAsymResult> s_asym;
  Verdict verdict = Verdict::not_certified;
  /// Failing conditions and error identifiers, in pipeline order.
  std::vector<std::string> reasons;

  bool certified() const { return verdict != Verdict::not_certified; }
};

/// Probe families used for the synthesis diagnostics.
std::vector<TestFunction> schwartz_probes();
std::vector<TestFunction> lizorkin_probes();

/// Coefficient grids of f along the ladder.
std::vector<CoeffGrid> ladder_grids(const Distribution& f, const FrameSystem& F, const std::vector<double>& scales,
                                    Regime regime, double x0, const PairOptions& opt = {});

/// grids -> degree -> condition (i) -> condition (ii) -> synthesis ->
/// Abelian cross-check; Gabor systems in the shift regime go through
/// s_asym_estimate. Failures become reasons, never exceptions (except for
/// invalid arguments).
AsymptoticsReport run_tauberian_pipeline(const Distribution& f, const FrameSystem& F, Regime regime,
                                         const PipelineConfig& config = {});

struct PolynomialExtraction {
  std::vector<double> coeffs;
  Distribution p;
  /// Homogeneous part c_plus x_+^alpha + c_minus x_-^alpha.
  cplx c_plus = 0.0;
  cplx c_minus = 0.0;
  Distribution g;
  /// Normalized residuals at the second smallest and smallest ladder scale.
  double residual_prev = 0.0;
  double residual = 0.0;
  bool decreasing = false;
  AsymptoticsReport report;
};

struct PolynomialOptions {
  double residual_tol = 1e-3;
  /// Residuals below this count as decreasing (quadrature noise floor).
  double noise_floor = 1e-6;
};

/// f(x0 + eps x) = p(eps x) + eps^alpha L(eps) g(x) + o(eps^alpha L(eps)).
/// Throws AlphaIntegerOrNegative or ResidualNotSmall.
PolynomialExtraction polynomial_extract(const Distribution& f, const frames::WaveletSystem& W,
                                        const QuasiAsymptoticsModel& model, const PipelineConfig& config = {},
                                        const PolynomialOptions& opt = {});

}  // namespace frameasym::asymptotics
