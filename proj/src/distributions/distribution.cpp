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

#include "frameasym/distributions/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "frameasym/error.hpp"
#include "frameasym/specfun/meyer.hpp"

namespace frameasym {

namespace {

constexpr double kPi = std::numbers::pi;

// Rough upper frequency (cycles per unit) used to size initial panels.
double bandwidth(const TestFunction& psi) {
  double base;
  switch (psi.base_kind()) {
    case BaseKind::gaussian: base = 1.5; break;
    case BaseKind::hermite: base = std::sqrt(2.0 * psi.hermite_order() + 1.0) / kPi + 0.5; break;
    case BaseKind::meyer_wavelet: base = specfun::kMeyerBand; break;
    case BaseKind::meyer_scaling: base = specfun::kMeyerScalingBand; break;
    default: base = 2.0; break;
  }
  return std::abs(psi.modulation()) + std::abs(psi.dilation()) * base;
}

int panels_for(double length, double freq) {
  const double p = std::ceil(length * freq * 1.5);
  return static_cast<int>(std::clamp(p, 1.0, 20000.0));
}

// Integrates g(t) psi(t) over [lo, hi] split at `breaks`. Segments that end
// at a breakpoint use t = p +- s^power near it so that algebraic endpoint
// behavior is smoothed.
cplx integrate_product(const std::function<void(std::span<const double>, std::span<cplx>)>& g,
                       const TestFunction& psi, double lo, double hi, std::vector<double> breaks,
                       double power, const numerics::QuadOptions& opt) {
  if (!(hi > lo)) return 0.0;
  std::vector<double> pts{lo};
  std::sort(breaks.begin(), breaks.end());
  for (double b : breaks)
    if (b > lo && b < hi) pts.push_back(b);
  pts.push_back(hi);
  const double freq = bandwidth(psi);
  auto is_break = [&](double x) { return std::find(breaks.begin(), breaks.end(), x) != breaks.end(); };

  cplx total = 0.0;
  std::vector<double> t, ws;
  std::vector<cplx> gv, pv;
  for (std::size_t s = 1; s < pts.size(); ++s) {
    const double a = pts[s - 1], b = pts[s];
    const bool la = is_break(a), rb = is_break(b);
    // Pieces: (start, end, anchor, direction); anchor used for substitution.
    struct Piece {
      double from, to;
      bool subst;
      double anchor;
      double dir;
    };
    std::vector<Piece> pieces;
    if (la && rb) {
      const double m = 0.5 * (a + b);
      pieces.push_back({a, m, true, a, 1.0});
      pieces.push_back({m, b, true, b, -1.0});
    } else if (la) {
      pieces.push_back({a, b, true, a, 1.0});
    } else if (rb) {
      pieces.push_back({a, b, true, b, -1.0});
    } else {
      pieces.push_back({a, b, false, 0.0, 1.0});
    }
    for (const Piece& pc : pieces) {
      numerics::QuadOptions o = opt;
      o.initial_panels = std::max(opt.initial_panels, panels_for(pc.to - pc.from, freq));
      if (!pc.subst) {
        auto integrand = [&](std::span<const double> x, std::span<cplx> out) {
          gv.resize(x.size());
          pv.resize(x.size());
          g(x, gv);
          psi.eval_batch(x, pv);
          for (std::size_t i = 0; i < x.size(); ++i) out[i] = gv[i] * pv[i];
        };
        total += numerics::integrate(integrand, pc.from, pc.to, o).value;
        continue;
      }
      // t = anchor + dir * s^power, s in [0, S]
      const double len = std::abs(pc.to - pc.from);
      const double smax = std::pow(len, 1.0 / power);
      auto integrand = [&](std::span<const double> sv, std::span<cplx> out) {
        t.resize(sv.size());
        ws.resize(sv.size());
        for (std::size_t i = 0; i < sv.size(); ++i) {
          const double sp = std::pow(sv[i], power);
          t[i] = pc.anchor + pc.dir * sp;
          ws[i] = power * (sv[i] == 0.0 ? (power == 1.0 ? 1.0 : 0.0) : sp / sv[i]);
        }
        gv.resize(sv.size());
        pv.resize(sv.size());
        g(t, gv);
        psi.eval_batch(t, pv);
        for (std::size_t i = 0; i < sv.size(); ++i) out[i] = gv[i] * pv[i] * ws[i];
      };
      total += numerics::integrate(integrand, 0.0, smax, o).value;
    }
  }
  return total;
}

cplx pair_regular(const RegularFunction& f, const TestFunction& psi, const numerics::QuadOptions& opt) {
  if (f.growth.kind == GrowthKind::exponential && f.growth.value != 0.0 && psi.class_tag() != TestClass::K1)
    fail(ErrorCode::class_mismatch, "exponential-type function " + f.label + " paired with a test function of class " +
                                        std::string(test_class_name(psi.class_tag())) + " (K1 required)");
  auto [lo, hi] = psi.support();
  if (f.growth.kind == GrowthKind::exponential && psi.base_kind() == BaseKind::gaussian) {
    // The product e^{rt} e^{-pi (a t + b)^2} peaks away from the window center.
    const double a = std::abs(psi.dilation());
    const double shift = std::abs(f.growth.value) / (2.0 * kPi * a * a);
    lo -= shift;
    hi += shift;
  }
  if (f.support) {
    lo = std::max(lo, f.support->first);
    hi = std::min(hi, f.support->second);
  }
  return integrate_product(f.eval, psi, lo, hi, f.breakpoints, 2.0, opt);
}

// Fourier transform of x_+^alpha (side plus) at xi != 0.
cplx homogeneous_hat(double alpha, Side side, double xi) {
  auto plus = [alpha](double x) {
    const double mag = std::tgamma(alpha + 1.0) * std::pow(2.0 * kPi * std::abs(x), -alpha - 1.0);
    const double ang = (x > 0 ? -1.0 : 1.0) * kPi * (alpha + 1.0) / 2.0;
    return std::polar(mag, ang);
  };
  switch (side) {
    case Side::plus: return plus(xi);
    case Side::minus: return plus(-xi);
    case Side::abs: return plus(xi) + plus(-xi);
  }
  return 0.0;
}

cplx pair_homogeneous(const HomogeneousPower& g, const TestFunction& psi, const numerics::QuadOptions& opt) {
  require(g.alpha > -1.0, "homogeneous power requires alpha > -1");
  if (psi.base_kind() == BaseKind::meyer_wavelet && psi.spectral_gap() > 0.0) {
    // Parseval: <g, psi> = int g^(-eta) psi^(eta) d eta over the bands of psi^,
    // where g^ is smooth.
    cplx total = 0.0;
    const double a = psi.dilation(), b = psi.offset(), nu = psi.modulation();
    for (auto [l, r] : psi.fourier_support()) {
      std::vector<double> pts{l, r};
      const double mid = 0.5 * (l + r);
      // Junction between the sine and cosine branches.
      const double junction = nu + (mid > nu ? 1.0 : -1.0) * std::abs(a) * (2.0 / 3.0);
      if (junction > l && junction < r) pts.insert(pts.begin() + 1, junction);
      numerics::QuadOptions o = opt;
      o.initial_panels = std::max(opt.initial_panels, panels_for(1.0, std::abs(b) + 2.0));
      auto integrand = [&](std::span<const double> eta, std::span<cplx> out) {
        for (std::size_t i = 0; i < eta.size(); ++i)
          out[i] = homogeneous_hat(g.alpha, g.side, -eta[i]) * psi.fourier(eta[i]);
      };
      total += numerics::integrate(integrand, pts, o).value;
    }
    return total;
  }
  const auto [lo, hi] = psi.support();
  const double alpha = g.alpha;
  auto eval = [alpha, side = g.side](std::span<const double> t, std::span<cplx> out) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double x = t[i];
      const bool in = (side == Side::abs) || (side == Side::plus ? x > 0.0 : x < 0.0);
      out[i] = (in && x != 0.0) ? std::pow(std::abs(x), alpha) : 0.0;
    }
  };
  const double power = alpha >= -0.5 ? 2.0 : 1.0 / (1.0 + alpha);
  const double l = g.side == Side::plus ? std::max(lo, 0.0) : lo;
  const double h = g.side == Side::minus ? std::min(hi, 0.0) : hi;
  return integrate_product(eval, psi, l, h, {0.0}, power, opt);
}

cplx pair_impl(const Distribution& f, const TestFunction& psi, const PairOptions& opt);

cplx pair_polynomial(const Polynomial& p, const TestFunction& psi, const PairOptions& opt) {
  if (psi.spectral_gap() > 0.0) return 0.0;
  cplx s = 0.0;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j)
    if (p.coeffs[j] != 0.0) s += p.coeffs[j] * moment(psi, static_cast<int>(j), opt.quad);
  return s;
}

cplx pair_impl(const Distribution& f, const TestFunction& psi, const PairOptions& opt) {
  return std::visit(
      [&](const auto& v) -> cplx {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RegularFunction>) {
          return pair_regular(v, psi, opt.quad);
        } else if constexpr (std::is_same_v<T, DeltaDerivative>) {
          const cplx d = psi.derivative(v.order, v.point);
          return (v.order % 2 == 0) ? d : -d;
        } else if constexpr (std::is_same_v<T, HomogeneousPower>) {
          return pair_homogeneous(v, psi, opt.quad);
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          return pair_polynomial(v, psi, opt);
        } else {
          cplx s = 0.0;
          for (const auto& [w, d] : v.terms) s += w * pair_impl(d, psi, opt);
          return s;
        }
      },
      f.variant());
}

// Coefficients of p(x0 + eps x).
std::vector<double> rescale_polynomial(const std::vector<double>& c, double x0, double eps) {
  const std::size_t n = c.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] == 0.0) continue;
    // (x0 + eps x)^j = sum_i C(j,i) x0^{j-i} eps^i x^i
    double binom = 1.0;
    for (std::size_t i = 0; i <= j; ++i) {
      out[i] += c[j] * binom * std::pow(x0, static_cast<double>(j - i)) * std::pow(eps, static_cast<double>(i));
      binom = binom * static_cast<double>(j - i) / static_cast<double>(i + 1);
    }
  }
  return out;
}

cplx pair_scaled_impl(const Distribution& f, double x0, double eps, const TestFunction& psi, const PairOptions& opt) {
  return std::visit(
      [&](const auto& v) -> cplx {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DeltaDerivative>) {
          const int k = v.order;
          const cplx d = psi.derivative(k, (v.point - x0) / eps);
          const double sign = (k % 2 == 0) ? 1.0 : -1.0;
          return sign * std::pow(eps, -1.0 - k) * d;
        } else if constexpr (std::is_same_v<T, HomogeneousPower>) {
          if (x0 == 0.0) return std::pow(eps, v.alpha) * pair_homogeneous(v, psi, opt.quad);
          return pair_homogeneous(v, psi.affine(1.0 / eps, -x0 / eps, 1.0 / eps), opt.quad);
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          return pair_polynomial(Polynomial{rescale_polynomial(v.coeffs, x0, eps)}, psi, opt);
        } else if constexpr (std::is_same_v<T, LinearCombination>) {
          cplx s = 0.0;
          for (const auto& [w, d] : v.terms) s += w * pair_scaled_impl(d, x0, eps, psi, opt);
          return s;
        } else {
          return pair_regular(v, psi.affine(1.0 / eps, -x0 / eps, 1.0 / eps), opt.quad);
        }
      },
      f.variant());
}

}  // namespace

std::string_view side_name(Side s) {
  switch (s) {
    case Side::plus: return "plus";
    case Side::minus: return "minus";
    case Side::abs: return "abs";
  }
  return "?";
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::origin: return "origin";
    case Regime::infinity: return "infinity";
    case Regime::shift: return "shift";
  }
  return "?";
}

Distribution::Distribution() : rep_(std::make_shared<const Variant>(LinearCombination{})) {}
Distribution::Distribution(Variant v) : rep_(std::make_shared<const Variant>(std::move(v))) {}

Distribution Distribution::zero() { return Distribution(); }

Distribution Distribution::regular(RegularFunction f) {
  require(static_cast<bool>(f.eval), "regular distribution needs an evaluator");
  return Distribution(Variant(std::move(f)));
}

Distribution Distribution::regular(std::function<cplx(double)> f, Growth growth, std::vector<double> breakpoints,
                                   std::string label) {
  RegularFunction rf;
  rf.eval = [f = std::move(f)](std::span<const double> t, std::span<cplx> out) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = f(t[i]);
  };
  rf.growth = growth;
  rf.breakpoints = std::move(breakpoints);
  rf.label = std::move(label);
  return regular(std::move(rf));
}

Distribution Distribution::delta(int order, double point) {
  require(order >= 0, "delta derivative order must be nonnegative");
  return Distribution(Variant(DeltaDerivative{order, point}));
}

Distribution Distribution::homogeneous(double alpha, Side side) {
  require(alpha > -1.0, "homogeneous power requires alpha > -1");
  return Distribution(Variant(HomogeneousPower{alpha, side}));
}

Distribution Distribution::polynomial(std::vector<double> coeffs) {
  return Distribution(Variant(Polynomial{std::move(coeffs)}));
}

Distribution Distribution::combination(std::vector<std::pair<cplx, Distribution>> terms) {
  return Distribution(Variant(LinearCombination{std::move(terms)}));
}

bool Distribution::is_zero() const {
  if (const auto* lc = std::get_if<LinearCombination>(rep_.get())) {
    for (const auto& [w, d] : lc->terms)
      if (w != cplx(0.0) && !d.is_zero()) return false;
    return true;
  }
  if (const auto* p = std::get_if<Polynomial>(rep_.get()))
    return std::all_of(p->coeffs.begin(), p->coeffs.end(), [](double c) { return c == 0.0; });
  return false;
}

Distribution Distribution::operator+(const Distribution& other) const {
  return combination({{1.0, *this}, {1.0, other}});
}

Distribution Distribution::scaled(cplx c) const { return combination({{c, *this}}); }

std::string Distribution::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RegularFunction>) {
          os << v.label;
        } else if constexpr (std::is_same_v<T, DeltaDerivative>) {
          os << "delta^(" << v.order << ")(x-" << v.point << ")";
        } else if constexpr (std::is_same_v<T, HomogeneousPower>) {
          os << "x_" << side_name(v.side) << "^" << v.alpha;
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          os << "poly[";
          for (std::size_t i = 0; i < v.coeffs.size(); ++i) os << (i ? "," : "") << v.coeffs[i];
          os << "]";
        } else {
          if (v.terms.empty()) os << "0";
          for (std::size_t i = 0; i < v.terms.size(); ++i) {
            if (i) os << " + ";
            os << "(" << v.terms[i].first.real() << "," << v.terms[i].first.imag() << ")*" << v.terms[i].second.describe();
          }
        }
      },
      variant());
  return os.str();
}

cplx pair(const Distribution& f, const TestFunction& psi, const PairOptions& opt) { return pair_impl(f, psi, opt); }

cplx pair_scaled(const ScaledDistribution& s, const TestFunction& psi, const PairOptions& opt) {
  if (s.regime == Regime::shift) {
    require(std::isfinite(s.scale), "shift offset must be finite");
    // <f(. + h), psi> = <f, psi(. - h)>
    return pair_impl(s.base, psi.affine(1.0, -s.scale), opt);
  }
  require(s.scale > 0.0 && std::isfinite(s.scale), "scale must be positive");
  const double x0 = s.regime == Regime::infinity ? 0.0 : s.center;
  return pair_scaled_impl(s.base, x0, s.scale, psi, opt);
}

SeminormEstimate seminorm_estimate(const TestFunction& psi, int k, int grid_points) {
  require(k >= 0, "seminorm order must be nonnegative");
  require(grid_points >= 3, "seminorm grid too small");
  if (k > psi.max_derivative())
    fail(ErrorCode::derivative_unavailable, "seminorm order " + std::to_string(k) + " exceeds derivative budget");
  const auto [lo, hi] = psi.support();
  SeminormEstimate est;
  est.lo = lo;
  est.hi = hi;
  est.grid_points = grid_points;
  est.spacing = (hi - lo) / (grid_points - 1);
  const bool exp_weight = psi.class_tag() == TestClass::K1;
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = lo + est.spacing * i;
    const double w = exp_weight ? std::exp(k * std::abs(x)) : std::pow(1.0 + x * x, 0.5 * k);
    for (int a = 0; a <= k; ++a) best = std::max(best, w * std::abs(psi.derivative(a, x)));
  }
  est.value = best;
  return est;
}

cplx moment(const TestFunction& psi, int n, const numerics::QuadOptions& opt) {
  require(n >= 0, "moment order must be nonnegative");
  // int t^n psi = (-2 pi i)^{-n} psi^^{(n)}(0), which vanishes identically
  // when the transform is zero on a neighborhood of the origin.
  if (psi.spectral_gap() > 0.0) return 0.0;
  const auto [lo, hi] = psi.support();
  auto g = [n](std::span<const double> t, std::span<cplx> out) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = std::pow(t[i], n);
  };
  return integrate_product(g, psi, lo, hi, {}, 1.0, opt);
}

cplx regular_value(const RegularFunction& f, double t) {
  cplx out;
  f.eval(std::span<const double>(&t, 1), std::span<cplx>(&out, 1));
  return out;
}

}  // namespace frameasym
