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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "internal.hpp"
#include "frameasym/asymptotics/asymptotics.hpp"
#include "frameasym/error.hpp"
#include "frameasym/format.hpp"

namespace frameasym::asymptotics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_grids(const std::vector<CoeffGrid>& grids, std::size_t min_rungs) {
  require(grids.size() >= min_rungs, "scale ladder needs at least " + std::to_string(min_rungs) + " rungs");
  for (const auto& g : grids) {
    require(g.indices == grids.front().indices, "ladder grids must share the index box");
    require(g.scale > 0 || g.regime == Regime::shift, "ladder scales must be positive");
  }
}

// Ordering used to break magnitude ties: smaller |index|, then lexicographic.
bool index_before(const std::array<int, 2>& a, const std::array<int, 2>& b) {
  const int na = std::abs(a[0]) + std::abs(a[1]), nb = std::abs(b[0]) + std::abs(b[1]);
  if (na != nb) return na < nb;
  return a < b;
}

struct LineFit {
  double slope = 0.0, intercept = 0.0, rms = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

double log_norm(double s, double alpha, const SlowlyVarying& L, BoundFamily family) {
  if (family == BoundFamily::gabor) return alpha * s + L.log_at_log(s);
  return alpha * std::log(s) + L.log_at_log(std::log(s));
}

void require_valid_L(const std::vector<CoeffGrid>& grids, const SlowlyVarying& L) {
  for (const auto& g : grids)
    require(L.valid_at(g.scale), "slowly varying model " + L.describe() + " not valid at scale " + shortest(g.scale));
}

}  // namespace

DegreeEstimate fit_degree(const std::vector<CoeffGrid>& grids, const SlowlyVarying& L) {
  check_grids(grids, 4);
  require_valid_L(grids, L);
  const std::size_t R = grids.size();
  const std::size_t use = (R + 1) / 2;
  const std::size_t r0 = R - use;
  const std::size_t K = grids.front().size();

  std::vector<double> x(use);
  for (std::size_t j = 0; j < use; ++j) x[j] = std::log(grids[r0 + j].scale);

  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < K; ++k) {
    bool ok = true;
    for (std::size_t j = r0; j < R && ok; ++j) ok = std::abs(grids[j].values[k]) > 0.0 && std::isfinite(std::abs(grids[j].values[k]));
    if (ok) usable.push_back(k);
  }
  if (usable.empty()) fail(ErrorCode::all_coefficients_vanishing, "no index has non-vanishing coefficients on the ladder");

  const auto& last = grids.back();
  const auto& idx = grids.front().indices;
  double top = 0.0;
  for (auto k : usable) top = std::max(top, std::abs(last.values[k]));
  std::size_t ref = K;
  for (auto k : usable)
    if (std::abs(last.values[k]) >= top * (1 - 1e-12) && (ref == K || index_before(idx[k], idx[ref]))) ref = k;

  auto slope_of = [&](std::size_t k) {
    std::vector<double> y(use);
    for (std::size_t j = 0; j < use; ++j)
      y[j] = std::log(std::abs(grids[r0 + j].values[k])) - L.log_at_log(x[j]);
    return least_squares(x, y);
  };

  DegreeEstimate est;
  const LineFit f = slope_of(ref);
  est.alpha = f.slope;
  est.intercept = f.intercept;
  est.residual = f.rms;
  est.reference = idx[ref];
  est.rungs_used = static_cast<int>(use);

  std::vector<std::size_t> rest;
  for (auto k : usable)
    if (k != ref) rest.push_back(k);
  std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(last.values[a]), mb = std::abs(last.values[b]);
    if (ma != mb) return ma > mb;
    return index_before(idx[a], idx[b]);
  });
  for (std::size_t i = 0; i < std::min<std::size_t>(3, rest.size()); ++i) {
    const double a = slope_of(rest[i]).slope;
    est.cross_indices.push_back(idx[rest[i]]);
    est.cross_alphas.push_back(a);
    est.dispersion = std::max(est.dispersion, std::abs(a - est.alpha));
  }
  return est;
}

DegreeEstimate estimate_degree(const std::vector<CoeffGrid>& grids, const SlowlyVarying& L, const DegreeOptions& opt) {
  DegreeEstimate est = fit_degree(grids, L);
  if (!(est.residual <= opt.residual_tol) || !(est.dispersion <= opt.dispersion_tol))
    fail(ErrorCode::non_power_law_behavior, "regression residual " + shortest(est.residual) + ", dispersion " +
                                                shortest(est.dispersion) + " under L = " + L.describe());
  return est;
}

SlowlyVarying select_slowly_varying(const std::vector<CoeffGrid>& grids, Regime regime) {
  SlowlyVarying best = SlowlyVarying::constant(1.0, regime);
  double best_res = fit_degree(grids, best).residual;
  for (int q = 1; q <= 12; ++q)
    for (int sign : {1, -1}) {
      const auto L = SlowlyVarying::log_power(sign * 0.25 * q, regime);
      bool valid = true;
      for (const auto& g : grids) valid = valid && L.valid_at(g.scale);
      if (!valid) continue;
      const double r = fit_degree(grids, L).residual;
      if (r < best_res) {
        best_res = r;
        best = L;
      }
    }
  return best;
}

namespace {

void stabilize(LimitTable& t, const LimitOptions& opt) {
  const std::size_t R = t.scales.size();
  double top = 0.0;
  for (const auto& r : t.ratios) top = std::max(top, std::abs(r.back()));
  t.limits.resize(t.size());
  t.last_change.assign(t.size(), kInf);
  t.convergent.assign(t.size(), 0);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto& r = t.ratios[k];
    t.limits[k] = r.back();
    if (R < 3 || static_cast<int>(R) < opt.min_rungs) continue;
    const double d = std::max(std::abs(r[R - 1] - r[R - 2]), std::abs(r[R - 2] - r[R - 3]));
    const double den = std::max(std::abs(r[R - 1]), opt.floor * top);
    t.last_change[k] = den > 0 ? d / den : (d > 0 ? kInf : 0.0);
    t.convergent[k] = t.last_change[k] < opt.tol;
  }
}

}  // namespace

LimitTable make_ratio_table(const std::vector<CoeffGrid>& grids, double alpha, const SlowlyVarying& L,
                            BoundFamily family, const LimitOptions& opt) {
  LimitTable t;
  t.index1_name = grids.front().index1_name;
  t.index2_name = grids.front().index2_name;
  t.indices = grids.front().indices;
  t.ratios.assign(t.size(), {});
  for (const auto& g : grids) {
    t.scales.push_back(g.scale);
    const double inv = std::exp(-log_norm(g.scale, alpha, L, family));
    for (std::size_t k = 0; k < t.size(); ++k) t.ratios[k].push_back(g.values[k] * inv);
  }
  stabilize(t, opt);
  return t;
}

LimitTable condition_i_limits(const std::vector<CoeffGrid>& grids, double alpha, const SlowlyVarying& L,
                              const LimitOptions& opt) {
  check_grids(grids, 1);
  require_valid_L(grids, L);
  return make_ratio_table(grids, alpha, L, BoundFamily::wavelet, opt);
}

bool LimitTable::all_convergent() const {
  return std::all_of(convergent.begin(), convergent.end(), [](char c) { return c != 0; });
}

std::size_t LimitTable::convergent_count() const {
  return static_cast<std::size_t>(std::count(convergent.begin(), convergent.end(), 1));
}

long LimitTable::find(int i1, int i2) const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k][0] == i1 && indices[k][1] == i2) return static_cast<long>(k);
  return -1;
}

std::string LimitTable::to_csv() const {
  std::string out = "index1,index2,re,im,last_change,convergent\n";
  for (std::size_t k = 0; k < size(); ++k) {
    append_int(out, indices[k][0]);
    out += ',';
    append_int(out, indices[k][1]);
    out += ',';
    append_number(out, limits[k].real());
    out += ',';
    append_number(out, limits[k].imag());
    out += ',';
    append_number(out, last_change[k]);
    out += convergent[k] ? ",1\n" : ",0\n";
  }
  return out;
}

std::string LimitTable::ratios_csv() const {
  std::string out = "index1,index2,scale,re,im\n";
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t j = 0; j < ratios[k].size(); ++j) {
      append_int(out, indices[k][0]);
      out += ',';
      append_int(out, indices[k][1]);
      out += ',';
      append_number(out, scales[j]);
      out += ',';
      append_number(out, ratios[k][j].real());
      out += ',';
      append_number(out, ratios[k][j].imag());
      out += '\n';
    }
  return out;
}

std::string_view family_name(BoundFamily f) {
  switch (f) {
    case BoundFamily::wavelet: return "wavelet";
    case BoundFamily::localized: return "localized";
    case BoundFamily::gabor: return "gabor";
  }
  return "?";
}

BoundFamily family_for(const FrameSystem& F) {
  if (std::holds_alternative<frames::GaborSystem>(F)) return BoundFamily::gabor;
  if (std::holds_alternative<frames::WaveletSystem>(F)) return BoundFamily::wavelet;
  return BoundFamily::localized;
}

TauberianBoundFit condition_ii_bound(const std::vector<CoeffGrid>& grids, double alpha, const SlowlyVarying& L,
                                     BoundFamily family, const BoundOptions& opt) {
  check_grids(grids, 1);
  if (family != BoundFamily::gabor) require_valid_L(grids, L);
  const auto& idx = grids.front().indices;
  const std::size_t K = idx.size(), R = grids.size();

  TauberianBoundFit fit;
  fit.family = family;
  std::vector<std::vector<double>> candidates;
  switch (family) {
    case BoundFamily::wavelet:
      fit.exponent_names = {"beta", "gamma"};
      for (int s = 0; s <= 24; ++s)
        for (int b = 0; b <= std::min(s, 12); ++b)
          if (s - b <= 12) candidates.push_back({0.5 * b, 0.5 * (s - b)});
      break;
    case BoundFamily::localized:
      fit.exponent_names = {"k"};
      for (int k = 0; k <= 10; ++k) candidates.push_back({double(k)});
      break;
    case BoundFamily::gabor:
      fit.exponent_names = {"tau"};
      for (int t = -4; t <= 8; ++t) candidates.push_back({double(t)});
      break;
  }

  // Threshold scale: the rung farthest from the limit.
  const Regime reg = grids.front().regime;
  double thr = grids.front().scale;
  for (const auto& g : grids) {
    if (family == BoundFamily::gabor || reg == Regime::infinity)
      thr = std::min(thr, g.scale);
    else
      thr = std::max(thr, g.scale);
  }
  fit.threshold = thr;

  // log |c| - log norm(s), or -inf for vanishing entries.
  std::vector<double> base(R * K);
  bool any = false;
  for (std::size_t j = 0; j < R; ++j) {
    const double ln = log_norm(grids[j].scale, alpha, L, family);
    for (std::size_t k = 0; k < K; ++k) {
      const double a = std::abs(grids[j].values[k]);
      base[j * K + k] = a > 0 ? std::log(a) - ln : -kInf;
      any = any || a > 0;
    }
  }
  if (!any) {
    fit.exponents.assign(fit.exponent_names.size(), 0.0);
    return fit;
  }

  // Half box: inner index box and the first half of the ladder.
  int lo1 = idx.front()[0], hi1 = lo1, amax2 = 0;
  for (const auto& i : idx) {
    lo1 = std::min(lo1, i[0]);
    hi1 = std::max(hi1, i[0]);
    amax2 = std::max(amax2, std::abs(i[1]));
  }
  std::vector<char> inner(K);
  for (std::size_t k = 0; k < K; ++k) {
    const int a = idx[k][0], b = idx[k][1];
    switch (family) {
      case BoundFamily::wavelet: {
        const int mlo = lo1 < 0 ? -((-lo1) / 2) : lo1;
        const int mhi = hi1 > 0 ? hi1 / 2 : hi1;
        inner[k] = a >= mlo && a <= mhi && std::abs(b) <= amax2 / 2;
        break;
      }
      case BoundFamily::localized: inner[k] = a <= std::max(1, hi1 / 2); break;
      case BoundFamily::gabor: inner[k] = std::abs(a) <= std::max(std::abs(lo1), std::abs(hi1)) / 2; break;
    }
  }
  const std::size_t Rh = (R + 1) / 2;

  auto log_weight = [&](const std::vector<double>& e, const std::array<int, 2>& i) {
    switch (family) {
      case BoundFamily::wavelet:
        return e[0] * std::log1p(std::abs(i[1])) + e[1] * std::log(std::ldexp(1.0, i[0]) + std::ldexp(1.0, -i[0]));
      case BoundFamily::localized: return e[0] * std::log(std::max(1, i[0]));
      case BoundFamily::gabor: return e[0] * std::log1p(std::abs(i[0]));
    }
    return 0.0;
  };

  struct Eval {
    double C_full = 0, C_half = 0, growth = 0;
    std::size_t arg_j = 0, arg_k = 0;
  };
  auto evaluate = [&](const std::vector<double>& e) {
    Eval ev;
    double full = -kInf, half = -kInf;
    for (std::size_t k = 0; k < K; ++k) {
      const double lw = log_weight(e, idx[k]);
      for (std::size_t j = 0; j < R; ++j) {
        const double v = base[j * K + k] - lw;
        if (v > full) {
          full = v;
          ev.arg_j = j;
          ev.arg_k = k;
        }
        if (inner[k] && j < Rh) half = std::max(half, v);
      }
    }
    ev.C_full = std::exp(full);
    ev.C_half = std::exp(half);
    ev.growth = ev.C_half > 0 ? ev.C_full / ev.C_half - 1.0 : kInf;
    return ev;
  };

  for (const auto& e : candidates) {
    const Eval ev = evaluate(e);
    if (ev.growth < opt.growth_tol) {
      fit.exponents = e;
      fit.C = ev.C_full;
      fit.growth = ev.growth;
      fit.bounded = true;
      switch (family) {
        case BoundFamily::wavelet: fit.boundary_hit = e[0] == 6.0 || e[1] == 6.0; break;
        case BoundFamily::localized: fit.boundary_hit = e[0] == 10.0; break;
        case BoundFamily::gabor: fit.boundary_hit = e[0] == -4.0 || e[0] == 8.0; break;
      }
      return fit;
    }
  }

  const auto& e = candidates.back();
  const Eval ev = evaluate(e);
  fit.exponents = e;
  fit.C = ev.C_full;
  fit.growth = ev.growth;
  fit.bounded = false;
  fit.boundary_hit = true;
  BoundWitness w;
  w.index = idx[ev.arg_k];
  w.scale = grids[ev.arg_j].scale;
  w.ratio = ev.C_full;
  const double lw = log_weight(e, w.index);
  for (std::size_t j = 0; j < R; ++j) w.ladder.push_back(std::exp(base[j * K + ev.arg_k] - lw));
  fit.witness = w;
  return fit;
}

}  // namespace frameasym::asymptotics
