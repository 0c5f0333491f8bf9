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

#include "frameasym/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>

#include "frameasym/error.hpp"

namespace frameasym::numerics {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208977074596, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                           0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                           0.295524224714752870173892994651338};

constexpr int kPoints = 21;

struct Interval {
  double a, b;
  cplx value;
  double error;
  double scale;  // integral of |f| over the interval
  int depth;
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

void nodes_for(double a, double b, double* t) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int j = 0; j < 10; ++j) {
    t[2 * j] = c - h * kXgk[j];
    t[2 * j + 1] = c + h * kXgk[j];
  }
  t[20] = c;
}

double qk_error(double resk_abs_diff, double resabs, double resasc) {
  double err = resk_abs_diff;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(eps * 50.0 * resabs, err);
  return err;
}

// Applies the rule to values f[0..20] laid out as in nodes_for.
Interval apply_rule(double a, double b, const cplx* f, int depth) {
  const double h = 0.5 * (b - a);
  const double ah = std::abs(h);
  cplx resk = f[20] * kWgk[10];
  cplx resg = 0.0;
  double absk_re = std::abs(f[20].real()) * kWgk[10];
  double absk_im = std::abs(f[20].imag()) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const cplx s = f[2 * j] + f[2 * j + 1];
    resk += kWgk[j] * s;
    absk_re += kWgk[j] * (std::abs(f[2 * j].real()) + std::abs(f[2 * j + 1].real()));
    absk_im += kWgk[j] * (std::abs(f[2 * j].imag()) + std::abs(f[2 * j + 1].imag()));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const cplx mean = resk * 0.5;
  double asc_re = kWgk[10] * std::abs(f[20].real() - mean.real());
  double asc_im = kWgk[10] * std::abs(f[20].imag() - mean.imag());
  for (int j = 0; j < 10; ++j) {
    asc_re += kWgk[j] * (std::abs(f[2 * j].real() - mean.real()) + std::abs(f[2 * j + 1].real() - mean.real()));
    asc_im += kWgk[j] * (std::abs(f[2 * j].imag() - mean.imag()) + std::abs(f[2 * j + 1].imag() - mean.imag()));
  }
  Interval iv;
  iv.a = a;
  iv.b = b;
  iv.value = resk * h;
  const cplx diff = (resk - resg) * h;
  iv.error = qk_error(std::abs(diff.real()), absk_re * ah, asc_re * ah) +
             qk_error(std::abs(diff.imag()), absk_im * ah, asc_im * ah);
  iv.scale = (absk_re + absk_im) * ah;
  iv.depth = depth;
  return iv;
}

void check_finite(const cplx* f, int n) {
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(f[i].real()) || !std::isfinite(f[i].imag()))
      fail(ErrorCode::quadrature_non_convergence, "integrand returned a non-finite value");
}

}  // namespace

QuadResult integrate(const BatchIntegrand& f, std::span<const double> points, const QuadOptions& opt) {
  require(points.size() >= 2, "integrate: need at least two points");
  for (std::size_t i = 1; i < points.size(); ++i)
    require(points[i] >= points[i - 1], "integrate: points must be sorted");
  const int panels = std::max(1, opt.initial_panels);

  std::vector<double> t;
  std::vector<cplx> v;
  std::vector<std::pair<double, double>> initial;
  for (std::size_t s = 1; s < points.size(); ++s) {
    const double a = points[s - 1], b = points[s];
    if (!(b > a)) continue;
    for (int p = 0; p < panels; ++p) {
      const double l = a + (b - a) * p / panels;
      const double r = (p + 1 == panels) ? b : a + (b - a) * (p + 1) / panels;
      initial.emplace_back(l, r);
    }
  }
  QuadResult res;
  if (initial.empty()) return res;

  t.resize(initial.size() * kPoints);
  v.resize(t.size());
  for (std::size_t i = 0; i < initial.size(); ++i) nodes_for(initial[i].first, initial[i].second, &t[i * kPoints]);
  f(t, v);
  check_finite(v.data(), static_cast<int>(v.size()));
  res.evaluations += static_cast<int>(t.size());

  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  std::vector<Interval> done;
  cplx total = 0.0;
  double err_total = 0.0, frozen_err = 0.0, noise_err = 0.0;
  for (std::size_t i = 0; i < initial.size(); ++i) {
    Interval iv = apply_rule(initial[i].first, initial[i].second, &v[i * kPoints], 0);
    total += iv.value;
    err_total += iv.error;
    heap.push(iv);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double t2[2 * kPoints];
  cplx v2[2 * kPoints];
  while (!heap.empty()) {
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (err_total - noise_err <= tol) break;
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool noise = worst.error <= 100.0 * eps * worst.scale;
    if (worst.depth >= opt.max_depth || noise || !(mid > worst.a && mid < worst.b)) {
      (noise ? noise_err : frozen_err) += worst.error;
      done.push_back(worst);
      if (frozen_err > tol && !noise) {
        std::ostringstream msg;
        msg << "adaptive refinement hit depth " << opt.max_depth << " on [" << worst.a << ", " << worst.b
            << "] with error " << worst.error << " above tolerance " << tol;
        fail(ErrorCode::quadrature_non_convergence, msg.str());
      }
      continue;
    }
    if (res.evaluations > opt.max_evaluations)
      fail(ErrorCode::quadrature_non_convergence, "evaluation budget exhausted before reaching tolerance");
    nodes_for(worst.a, mid, t2);
    nodes_for(mid, worst.b, t2 + kPoints);
    f(std::span<const double>(t2, 2 * kPoints), std::span<cplx>(v2, 2 * kPoints));
    check_finite(v2, 2 * kPoints);
    res.evaluations += 2 * kPoints;
    Interval l = apply_rule(worst.a, mid, v2, worst.depth + 1);
    Interval r = apply_rule(mid, worst.b, v2 + kPoints, worst.depth + 1);
    total += (l.value + r.value) - worst.value;
    err_total += (l.error + r.error) - worst.error;
    heap.push(l);
    heap.push(r);
  }
  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  // Final sum in a fixed order so the result does not depend on refinement history.
  std::sort(done.begin(), done.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  for (const auto& iv : done) {
    res.value += iv.value;
    res.error += iv.error;
  }
  res.intervals = static_cast<int>(done.size());
  return res;
}

QuadResult integrate(const BatchIntegrand& f, double a, double b, const QuadOptions& opt) {
  const double pts[2] = {a, b};
  return integrate(f, std::span<const double>(pts, 2), opt);
}

namespace {
std::unique_ptr<GaussRule> build_gl(int n) {
  auto rule = std::make_unique<GaussRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->nodes[i] = -x;
    rule->nodes[n - 1 - i] = x;
    rule->weights[i] = w;
    rule->weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule->nodes[n / 2] = 0.0;
  return rule;
}
}  // namespace

const GaussRule& gauss_legendre(int n) {
  require(n >= 2, "gauss_legendre: need at least two nodes");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_gl(n);
  return *slot;
}

void composite_gauss(double a, double b, double panel, int order, std::vector<double>& nodes,
                     std::vector<double>& weights) {
  require(b > a && panel > 0.0, "composite_gauss: bad interval");
  const GaussRule& g = gauss_legendre(order);
  const int count = std::max(1, static_cast<int>(std::ceil((b - a) / panel - 1e-12)));
  const double h = (b - a) / count;
  nodes.clear();
  weights.clear();
  nodes.reserve(static_cast<std::size_t>(count) * order);
  weights.reserve(nodes.capacity());
  for (int p = 0; p < count; ++p) {
    const double c = a + h * (p + 0.5);
    for (int i = 0; i < order; ++i) {
      nodes.push_back(c + 0.5 * h * g.nodes[i]);
      weights.push_back(0.5 * h * g.weights[i]);
    }
  }
}

}  // namespace frameasym::numerics
