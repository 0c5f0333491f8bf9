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

#include "internal.hpp"
#include "frameasym/error.hpp"
#include "frameasym/format.hpp"
#include "frameasym/numerics/quadrature.hpp"
#include "frameasym/parallel.hpp"

namespace frameasym::asymptotics {

namespace {
constexpr double kPi = std::numbers::pi;
}

cplx window_transform(const TestFunction& w, cplx zeta) {
  const auto [lo, hi] = w.support();
  std::vector<double> x, wt;
  numerics::composite_gauss(lo, hi, 1.0 / 16, 16, x, wt);
  std::vector<cplx> v(x.size());
  w.eval_batch(x, v);
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += wt[i] * v[i] * std::exp(cplx(0, -2 * kPi) * zeta * x[i]);
  return s;
}

SAsymResult s_asym_estimate(const Distribution& f, const frames::GaborSystem& G, const std::vector<double>& x_ladder,
                            const SlowlyVarying& L, const SAsymOptions& opt) {
  require(x_ladder.size() >= 6, "S-asymptotic ladder needs at least 6 positions");
  for (std::size_t i = 1; i < x_ladder.size(); ++i) require(x_ladder[i] > x_ladder[i - 1], "x ladder must increase");
  require(L.regime == Regime::infinity, "S-asymptotics need L slowly varying at infinity");
  if (L.log_exponent() != 0.0) require(x_ladder.front() >= std::log(L.bound), "x ladder outside the validity of L");
  require(G.m_max >= 0, "m_max must be non-negative");

  const std::size_t R = x_ladder.size();
  const int M = G.m_max;
  const std::size_t K = static_cast<std::size_t>(2 * M + 1);
  SAsymResult res;
  res.grids.resize(R);
  for (std::size_t j = 0; j < R; ++j) {
    auto& g = res.grids[j];
    g.system = "gabor";
    g.index1_name = "m";
    g.index2_name = "-";
    g.scale = x_ladder[j];
    g.regime = Regime::shift;
    for (int m = -M; m <= M; ++m) g.indices.push_back({m, 0});
    g.values.assign(K, 0.0);
  }
  parallel_for(R * K, [&](std::size_t q) {
    const std::size_t j = q / K, k = q % K;
    const int m = static_cast<int>(k) - M;
    res.grids[j].values[k] = frames::stft(f, G.window, x_ladder[j], G.beta * m, opt.pair);
  });

  bool any = false;
  for (const auto& g : res.grids)
    for (auto v : g.values) any = any || v != cplx(0.0);
  if (!any) {
    res.degenerate_zero = true;
    res.model.L = L;
    res.table = make_ratio_table(res.grids, 0.0, L, BoundFamily::gabor, opt.limit);
    res.bound = condition_ii_bound(res.grids, 0.0, L, BoundFamily::gabor, opt.bound);
    res.predicted.assign(K, 0.0);
    return res;
  }

  // Rate from the m = 0 channel over the ladder tail.
  const std::size_t use = (R + 1) / 2, r0 = R - use;
  std::vector<double> xs, ys;
  for (std::size_t j = r0; j < R; ++j) {
    const double a = std::abs(res.grids[j].values[static_cast<std::size_t>(M)]);
    if (!(a > 0) || !std::isfinite(a))
      fail(ErrorCode::non_exponential_scaling, "m = 0 channel vanishes at x = " + shortest(x_ladder[j]));
    xs.push_back(x_ladder[j]);
    ys.push_back(std::log(a) - L.log_at_log(x_ladder[j]));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < use; ++i) {
    mx += xs[i] / use;
    my += ys[i] / use;
  }
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < use; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double b = sxy / sxx;
  for (std::size_t i = 1; i < use; ++i) res.tail_slopes.push_back((ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
  const std::size_t ns = res.tail_slopes.size();
  if (ns >= 2 && !(std::abs(res.tail_slopes[ns - 1] - res.tail_slopes[ns - 2]) < opt.slope_tol))
    fail(ErrorCode::non_exponential_scaling, "tail slopes " + shortest(res.tail_slopes[ns - 2]) + ", " +
                                                 shortest(res.tail_slopes[ns - 1]) + " do not stabilize");

  // Phase-corrected normalized channels.
  std::vector<CoeffGrid> corrected = res.grids;
  for (auto& g : corrected)
    for (std::size_t k = 0; k < K; ++k) g.values[k] *= std::polar(1.0, 2 * kPi * G.beta * g.indices[k][0] * g.scale);
  res.table = make_ratio_table(corrected, b, L, BoundFamily::gabor, opt.limit);
  res.bound = condition_ii_bound(corrected, b, L, BoundFamily::gabor, opt.bound);

  std::vector<cplx> P(K);
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const int m = res.table.indices[k][0];
    P[k] = std::conj(window_transform(G.window, cplx(-G.beta * m, b / (2 * kPi))));
    num += std::conj(P[k]) * res.table.limits[k];
    den += std::norm(P[k]);
  }
  const cplx C = num / den;
  double rn = 0, rd = 0;
  res.predicted.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    res.predicted[k] = C * P[k];
    rn += std::norm(res.table.limits[k] - res.predicted[k]);
    rd += std::norm(res.table.limits[k]);
  }
  res.c_residual = std::sqrt(rn / rd);
  res.model.b = b;
  res.model.C = C;
  res.model.L = L;
  if (!(res.c_residual <= opt.c_tol))
    fail(ErrorCode::inconsistent_am, "a_m vs C conj(w^(-beta m + i b / 2 pi)) residual " + shortest(res.c_residual));
  return res;
}

MonotoneResult monotone_tauberian(const std::function<double(double)>& f, const TestFunction& w, double b,
                                  const SlowlyVarying& L, const std::vector<double>& x_ladder) {
  require(!x_ladder.empty(), "empty x ladder");
  for (std::size_t i = 1; i < x_ladder.size(); ++i) require(x_ladder[i] > x_ladder[i - 1], "x ladder must increase");
  const double top = x_ladder.back();

  const int probes = 4001;
  double prev = f(0.0);
  if (!(prev >= 0)) fail(ErrorCode::not_monotone, "f(0) = " + shortest(prev) + " is negative");
  for (int i = 1; i < probes; ++i) {
    const double t = top * i / (probes - 1);
    const double v = f(t);
    if (!(v >= prev - 1e-12 * std::abs(prev)))
      fail(ErrorCode::not_monotone, "f decreases near t = " + shortest(t));
    prev = v;
  }

  const auto [lo, hi] = w.support();
  for (int i = 0; i < probes; ++i) {
    const double t = lo + (hi - lo) * i / (probes - 1);
    const cplx v = w(t);
    require(v.real() >= -1e-14 && std::abs(v.imag()) <= 1e-14, "monotone Tauberian window must be non-negative");
  }

  MonotoneResult res;
  if (b != 0.0 && w.class_tag() != TestClass::K1)
    fail(ErrorCode::divergent_window_integral, "window of class " + std::string(test_class_name(w.class_tag())) +
                                                   " has no exponential moment");
  {
    std::vector<double> x, wt;
    numerics::composite_gauss(lo, hi, 1.0 / 16, 16, x, wt);
    std::vector<cplx> v(x.size());
    w.eval_batch(x, v);
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += wt[i] * v[i].real() * std::exp(b * x[i]);
    res.window_integral = s;
  }
  if (!(res.window_integral > 0) || !std::isfinite(res.window_integral))
    fail(ErrorCode::divergent_window_integral, "int w(t) e^{bt} dt = " + shortest(res.window_integral));

  for (double x : x_ladder) {
    const double a = std::max(0.0, x + lo), c = x + hi;
    double I = 0.0;
    if (c > a) {
      const auto q = numerics::integrate(
          [&](std::span<const double> t, std::span<cplx> out) {
            for (std::size_t i = 0; i < t.size(); ++i) out[i] = f(t[i]) * w(t[i] - x).real();
          },
          a, c);
      I = q.value.real();
    }
    res.a0_ladder.push_back(I * std::exp(-b * x - L.log_at_log(x)));
  }
  res.a0 = res.a0_ladder.back();
  res.limit = res.a0 / res.window_integral;
  res.direct_ratio = f(top) * std::exp(-b * top - L.log_at_log(top));
  const double scale = std::max(std::abs(res.limit), std::abs(res.direct_ratio));
  res.agreement = scale > 0 ? std::abs(res.limit - res.direct_ratio) / scale : 0.0;
  return res;
}

}  // namespace frameasym::asymptotics
