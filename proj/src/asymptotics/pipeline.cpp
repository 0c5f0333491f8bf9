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

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "internal.hpp"
#include "frameasym/error.hpp"
#include "frameasym/format.hpp"

namespace frameasym::asymptotics {

namespace {

double log_norm_point(double s, double alpha, const SlowlyVarying& L) {
  return alpha * std::log(s) + L.log_at_log(std::log(s));
}

bool all_zero(const std::vector<CoeffGrid>& grids) {
  for (const auto& g : grids)
    for (auto v : g.values)
      if (v != cplx(0.0)) return false;
  return true;
}

std::string index_text(const std::array<int, 2>& i) {
  return "(" + std::to_string(i[0]) + "," + std::to_string(i[1]) + ")";
}

}  // namespace

std::vector<TestFunction> schwartz_probes() {
  std::vector<TestFunction> p;
  for (auto [c, s] : {std::pair{0.0, 1.0}, {0.5, 1.0}, {-0.7, 0.8}, {1.2, 1.5}, {0.3, 0.6}})
    p.push_back(TestFunction::gaussian(c, s));
  return p;
}

std::vector<TestFunction> lizorkin_probes() {
  std::vector<TestFunction> p;
  for (auto [a, b] : {std::pair{1.5, 0.3}, {0.75, -0.2}, {1.25, 0.0}, {0.6, 0.5}, {3.0, 1.0}})
    p.push_back(TestFunction::meyer_wavelet().affine(a, b));
  return p;
}

std::vector<CoeffGrid> ladder_grids(const Distribution& f, const FrameSystem& F, const std::vector<double>& scales,
                                    Regime regime, double x0, const PairOptions& opt) {
  std::vector<CoeffGrid> grids;
  grids.reserve(scales.size());
  for (double s : scales) grids.push_back(frames::frame_coeffs(ScaledDistribution{f, x0, s, regime}, F, opt));
  return grids;
}

frames::Reconstruction synthesize_reconstruction(const FrameSystem& F, const LimitTable& table) {
  CoeffGrid c;
  c.system = std::string(frames::system_name(F));
  c.index1_name = table.index1_name;
  c.index2_name = table.index2_name;
  c.indices = table.indices;
  c.values = table.limits;
  return frames::dual_frame_apply(F, c);
}

Distribution synthesize_limit(const FrameSystem& F, const LimitTable& table) {
  bool zero = true;
  for (auto v : table.limits) zero = zero && v == cplx(0.0);
  if (zero) return Distribution::zero();
  return synthesize_reconstruction(F, table).as_distribution();
}

LimitTable abelian_predict(const QuasiAsymptoticsModel& model, const FrameSystem& F, const PairOptions& opt) {
  const CoeffGrid g = frames::frame_coeffs(ScaledDistribution{model.g, 0.0, 1.0, Regime::origin}, F, opt);
  LimitTable t;
  t.index1_name = g.index1_name;
  t.index2_name = g.index2_name;
  t.indices = g.indices;
  t.limits = g.values;
  t.scales = {1.0};
  for (auto v : g.values) t.ratios.push_back({v});
  t.last_change.assign(t.size(), 0.0);
  t.convergent.assign(t.size(), 1);
  return t;
}

double abelian_residual(const LimitTable& limits, const LimitTable& predicted) {
  double r = 0.0;
  for (std::size_t k = 0; k < limits.size(); ++k) {
    const long p = predicted.find(limits.indices[k][0], limits.indices[k][1]);
    if (p < 0) continue;
    const cplx b = predicted.limits[static_cast<std::size_t>(p)];
    r = std::max(r, std::abs(limits.limits[k] - b) / (1.0 + std::abs(b)));
  }
  return r;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::certified_trivial: return "certified (trivial)";
    case Verdict::not_certified: return "not certified";
  }
  return "?";
}

namespace {

AsymptoticsReport gabor_pipeline(const Distribution& f, const frames::GaborSystem& G, const PipelineConfig& cfg) {
  AsymptoticsReport rep;
  rep.frame = "gabor";
  rep.regime = Regime::shift;
  rep.scales = cfg.x_ladder;
  SlowlyVarying L = cfg.L ? *cfg.L : SlowlyVarying::constant(1.0, Regime::infinity);
  rep.L = L;
  SAsymptoticsModel model;
  model.L = L;
  rep.model = model;
  SAsymResult s;
  try {
    s = s_asym_estimate(f, G, cfg.x_ladder, L, cfg.s_asym);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_argument) throw;
    rep.reasons.push_back(e.what());
    rep.verdict = Verdict::not_certified;
    return rep;
  }
  rep.model = s.model;
  rep.limits = s.table;
  rep.bound = s.bound;
  rep.abelian_residual = s.c_residual;
  if (s.degenerate_zero) {
    rep.verdict = Verdict::certified_trivial;
    rep.reasons.push_back("all ladder values vanish: zero model with C = 0");
    rep.s_asym = std::move(s);
    return rep;
  }
  if (!s.table.all_convergent())
    rep.reasons.push_back("condition (i): " + std::to_string(s.table.size() - s.table.convergent_count()) + " of " +
                          std::to_string(s.table.size()) + " channels not convergent");
  if (!s.bound.bounded)
    rep.reasons.push_back("condition (ii): violated, witness m = " + std::to_string(s.bound.witness->index[0]));
  if (!(s.c_residual < cfg.abelian_tol))
    rep.reasons.push_back("S-asymptotic relation residual " + shortest(s.c_residual));
  rep.verdict = rep.reasons.empty() ? Verdict::certified : Verdict::not_certified;
  rep.s_asym = std::move(s);
  return rep;
}

}  // namespace

AsymptoticsReport run_tauberian_pipeline(const Distribution& f, const FrameSystem& F, Regime regime,
                                         const PipelineConfig& cfg) {
  if (const auto* G = std::get_if<frames::GaborSystem>(&F)) {
    require(regime == Regime::shift, "Gabor systems analyze S-asymptotics (shift regime)");
    return gabor_pipeline(f, *G, cfg);
  }
  require(regime == Regime::origin || regime == Regime::infinity,
          "quasiasymptotic pipeline needs the origin or infinity regime");

  AsymptoticsReport rep;
  rep.frame = std::string(frames::system_name(F));
  rep.regime = regime;
  Ladder ladder = cfg.ladder;
  ladder.regime = regime;
  rep.scales = ladder.scales();
  const BoundFamily family = family_for(F);
  const double x0 = regime == Regime::origin ? cfg.x0 : 0.0;

  QuasiAsymptoticsModel model;
  model.center = x0;
  model.at_infinity = regime == Regime::infinity;

  const auto grids = ladder_grids(f, F, rep.scales, regime, x0, cfg.pair);
  if (all_zero(grids)) {
    model.L = cfg.L ? *cfg.L : SlowlyVarying::constant(1.0, regime);
    rep.L = model.L;
    rep.model = model;
    rep.limits = condition_i_limits(grids, 0.0, model.L, cfg.limit);
    rep.bound = condition_ii_bound(grids, 0.0, model.L, family, cfg.bound);
    rep.verdict = Verdict::certified_trivial;
    rep.reasons.push_back("all coefficients vanish: zero model");
    return rep;
  }

  const SlowlyVarying L = cfg.L ? *cfg.L : select_slowly_varying(grids, regime);
  model.L = L;
  rep.L = L;
  rep.model = model;
  try {
    rep.degree = estimate_degree(grids, L, cfg.degree);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_argument) throw;
    rep.reasons.push_back(e.what());
    if (e.code() == ErrorCode::non_power_law_behavior) rep.degree = fit_degree(grids, L);
    rep.verdict = Verdict::not_certified;
    return rep;
  }
  model.alpha = rep.degree->alpha;

  rep.limits = condition_i_limits(grids, model.alpha, L, cfg.limit);
  if (!rep.limits.all_convergent())
    rep.reasons.push_back("condition (i): " + std::to_string(rep.limits.size() - rep.limits.convergent_count()) +
                          " of " + std::to_string(rep.limits.size()) + " indices not convergent");
  rep.bound = condition_ii_bound(grids, model.alpha, L, family, cfg.bound);
  if (!rep.bound.bounded)
    rep.reasons.push_back("condition (ii): violated, witness " + index_text(rep.bound.witness->index));

  if (rep.reasons.empty()) {
    try {
      const auto recon = synthesize_reconstruction(F, rep.limits);
      model.g = recon.as_distribution();
      const auto probes = family == BoundFamily::wavelet ? lizorkin_probes() : schwartz_probes();
      const double s = rep.scales.back();
      const double inv = std::exp(-log_norm_point(s, model.alpha, L));
      for (const auto& psi : probes) {
        ProbeCheck pc;
        pc.probe = psi.describe();
        pc.synthesized = pair(model.g, psi, cfg.pair);
        pc.expected = pair_scaled(ScaledDistribution{f, x0, s, regime}, psi, cfg.pair) * inv;
        pc.rel_error = std::abs(pc.synthesized - pc.expected) / std::max(std::abs(pc.expected), 1e-300);
        rep.synthesis_error = std::max(rep.synthesis_error, pc.rel_error);
        rep.synthesis.push_back(pc);
      }
      rep.abelian = abelian_predict(model, F, cfg.pair);
      rep.abelian_residual = abelian_residual(rep.limits, *rep.abelian);
      if (!(rep.abelian_residual < cfg.abelian_tol))
        rep.reasons.push_back("Abelian cross-check residual " + shortest(rep.abelian_residual));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_argument) throw;
      rep.reasons.push_back(e.what());
    }
  }
  rep.model = model;
  rep.verdict = rep.reasons.empty() ? Verdict::certified : Verdict::not_certified;
  return rep;
}

PolynomialExtraction polynomial_extract(const Distribution& f, const frames::WaveletSystem& W,
                                        const QuasiAsymptoticsModel& model, const PipelineConfig& config,
                                        const PolynomialOptions& opt) {
  auto non_integer_positive = [](double a) { return a > 0 && std::abs(a - std::round(a)) > 1e-9; };
  if (!non_integer_positive(model.alpha))
    fail(ErrorCode::alpha_integer_or_negative, "alpha = " + shortest(model.alpha));

  PipelineConfig cfg = config;
  cfg.L = model.L;
  cfg.x0 = model.center;
  PolynomialExtraction out;
  out.report = run_tauberian_pipeline(f, W, Regime::origin, cfg);
  if (!out.report.certified()) {
    std::string why;
    for (const auto& r : out.report.reasons) why += (why.empty() ? "" : "; ") + r;
    fail(ErrorCode::residual_not_small, "wavelet conditions fail: " + why);
  }
  const double alpha = out.report.degree ? out.report.degree->alpha : model.alpha;
  if (!non_integer_positive(alpha)) fail(ErrorCode::alpha_integer_or_negative, "estimated alpha = " + shortest(alpha));

  // Homogeneous limit in the span of x_+^alpha, x_-^alpha.
  const auto gp = Distribution::homogeneous(alpha, Side::plus);
  const auto gm = Distribution::homogeneous(alpha, Side::minus);
  const auto bp = abelian_predict({alpha, model.L, 0.0, false, gp}, W, cfg.pair);
  const auto bm = abelian_predict({alpha, model.L, 0.0, false, gm}, W, cfg.pair);
  const auto& lim = out.report.limits;
  Eigen::MatrixXcd A(static_cast<long>(lim.size()), 2);
  Eigen::VectorXcd y(static_cast<long>(lim.size()));
  for (std::size_t k = 0; k < lim.size(); ++k) {
    const long p = bp.find(lim.indices[k][0], lim.indices[k][1]);
    A(static_cast<long>(k), 0) = bp.limits[static_cast<std::size_t>(p)];
    A(static_cast<long>(k), 1) = bm.limits[static_cast<std::size_t>(p)];
    y(static_cast<long>(k)) = lim.limits[k];
  }
  const Eigen::VectorXcd c = A.colPivHouseholderQr().solve(y);
  out.c_plus = c(0);
  out.c_minus = c(1);
  out.g = Distribution::combination({{out.c_plus, gp}, {out.c_minus, gm}});

  // Polynomial part from S probes at the smallest scale.
  const int D = static_cast<int>(std::floor(alpha)) + 1;
  const auto probes = schwartz_probes();
  const std::size_t P = probes.size();
  std::vector<cplx> G(P);
  std::vector<std::vector<cplx>> mom(P, std::vector<cplx>(static_cast<std::size_t>(D)));
  for (std::size_t i = 0; i < P; ++i) {
    G[i] = pair(out.g, probes[i], cfg.pair);
    for (int d = 0; d < D; ++d) mom[i][static_cast<std::size_t>(d)] = moment(probes[i], d);
  }
  const auto& scales = out.report.scales;
  require(scales.size() >= 2, "polynomial extraction needs two ladder scales");
  auto data = [&](double eps) {
    std::vector<cplx> r(P);
    const double N = std::exp(log_norm_point(eps, alpha, model.L));
    for (std::size_t i = 0; i < P; ++i)
      r[i] = pair_scaled(ScaledDistribution{f, model.center, eps, Regime::origin}, probes[i], cfg.pair) - N * G[i];
    return r;
  };
  const double eps = scales.back();
  const auto r = data(eps);
  Eigen::MatrixXd Ar(static_cast<long>(2 * P), D);
  Eigen::VectorXd yr(static_cast<long>(2 * P));
  for (std::size_t i = 0; i < P; ++i) {
    for (int d = 0; d < D; ++d) {
      Ar(static_cast<long>(2 * i), d) = mom[i][static_cast<std::size_t>(d)].real();
      Ar(static_cast<long>(2 * i + 1), d) = mom[i][static_cast<std::size_t>(d)].imag();
    }
    yr(static_cast<long>(2 * i)) = r[i].real();
    yr(static_cast<long>(2 * i + 1)) = r[i].imag();
  }
  const Eigen::VectorXd q = Ar.colPivHouseholderQr().solve(yr);
  out.coeffs.resize(static_cast<std::size_t>(D));
  for (int d = 0; d < D; ++d) out.coeffs[static_cast<std::size_t>(d)] = q(d) / std::pow(eps, d);
  out.p = Distribution::polynomial(out.coeffs);

  double gnorm = 0.0;
  for (auto v : G) gnorm += std::norm(v);
  gnorm = std::sqrt(gnorm);
  auto residual_at = [&](double e, const std::vector<cplx>& rr) {
    double s = 0.0;
    for (std::size_t i = 0; i < P; ++i) {
      cplx v = rr[i];
      for (int d = 0; d < D; ++d) v -= out.coeffs[static_cast<std::size_t>(d)] * std::pow(e, d) * mom[i][static_cast<std::size_t>(d)];
      s += std::norm(v);
    }
    return std::sqrt(s) / (std::exp(log_norm_point(e, alpha, model.L)) * gnorm);
  };
  out.residual = residual_at(eps, r);
  const double eps_prev = scales[scales.size() - 2];
  out.residual_prev = residual_at(eps_prev, data(eps_prev));
  out.decreasing = out.residual <= out.residual_prev || out.residual < opt.noise_floor;
  if (!(out.residual <= opt.residual_tol))
    fail(ErrorCode::residual_not_small, "normalized remainder " + shortest(out.residual));
  return out;
}

}  // namespace frameasym::asymptotics
