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
#include <sstream>

#include "frameasym/asymptotics/asymptotics.hpp"
#include "frameasym/error.hpp"
#include "frameasym/format.hpp"

namespace frameasym::asymptotics {

namespace {
double default_bound(Regime r) { return r == Regime::origin ? 0.5 : 2.0; }
}  // namespace

SlowlyVarying SlowlyVarying::constant(double c, Regime regime) {
  require(c > 0 && std::isfinite(c), "slowly varying constant must be positive");
  SlowlyVarying L;
  L.regime = regime;
  L.bound = default_bound(regime);
  L.factors.push_back({Factor::Kind::constant, c});
  return L;
}

SlowlyVarying SlowlyVarying::log_power(double beta, Regime regime) {
  require(std::isfinite(beta), "log power exponent must be finite");
  SlowlyVarying L;
  L.regime = regime;
  L.bound = default_bound(regime);
  L.factors.push_back({Factor::Kind::log_power, beta});
  return L;
}

SlowlyVarying SlowlyVarying::product(const SlowlyVarying& a, const SlowlyVarying& b) {
  require(a.regime == b.regime, "slowly varying factors must share a regime");
  SlowlyVarying L = a;
  L.factors.insert(L.factors.end(), b.factors.begin(), b.factors.end());
  L.bound = a.regime == Regime::origin ? std::min(a.bound, b.bound) : std::max(a.bound, b.bound);
  return L;
}

double SlowlyVarying::log_at_log(double u) const {
  double s = 0.0;
  for (const auto& f : factors) {
    if (f.kind == Factor::Kind::constant)
      s += std::log(f.value);
    else if (f.value != 0.0)
      s += f.value * std::log(std::abs(u));
  }
  return s;
}

double SlowlyVarying::operator()(double t) const { return std::exp(log_at_log(std::log(t))); }

double SlowlyVarying::log_exponent() const {
  double s = 0.0;
  for (const auto& f : factors)
    if (f.kind == Factor::Kind::log_power) s += f.value;
  return s;
}

double SlowlyVarying::constant_factor() const {
  double c = 1.0;
  for (const auto& f : factors)
    if (f.kind == Factor::Kind::constant) c *= f.value;
  return c;
}

bool SlowlyVarying::valid_at(double t) const {
  if (!(t > 0)) return false;
  if (log_exponent() == 0.0) return true;
  return regime == Regime::origin ? t <= bound : t >= bound;
}

bool SlowlyVarying::verify(std::string* why) const {
  for (const auto& f : factors)
    if (f.kind == Factor::Kind::constant && !(f.value > 0)) {
      if (why) *why = "non-positive constant factor";
      return false;
    }
  // Deep probe points of the regime, handled in log space.
  const double u = regime == Regime::origin ? std::log(1e-300) : std::log(1e300);
  for (double a : {0.5, 2.0, 10.0}) {
    const double r = std::exp(log_at_log(u + std::log(a)) - log_at_log(u));
    if (std::abs(r - 1.0) > 0.01) {
      if (why) *why = "L(at)/L(t) = " + shortest(r) + " at a = " + shortest(a);
      return false;
    }
  }
  return true;
}

std::string SlowlyVarying::describe() const {
  std::ostringstream os;
  const double c = constant_factor();
  const double beta = log_exponent();
  if (beta == 0.0) {
    os << "constant{" << shortest(c) << "}";
  } else {
    if (c != 1.0) os << shortest(c) << "*";
    os << "logpower{" << shortest(beta) << "}";
  }
  os << "@" << regime_name(regime);
  return os.str();
}

std::vector<double> Ladder::scales() const {
  if (!explicit_scales.empty()) return explicit_scales;
  require(base > 1.0, "ladder base must exceed 1");
  require(j_max >= j_min, "ladder needs j_max >= j_min");
  std::vector<double> s;
  for (int j = j_min; j <= j_max; ++j) s.push_back(std::pow(base, regime == Regime::origin ? -j : j));
  return s;
}

double SAsymptoticsModel::c(double h) const { return std::exp(b * h + L.log_at_log(h)); }

Distribution SAsymptoticsModel::g() const {
  if (C == cplx(0.0)) return Distribution::zero();
  const double rate = b;
  const cplx amp = C;
  return Distribution::regular([rate, amp](double x) { return amp * std::exp(rate * x); },
                               {GrowthKind::exponential, std::abs(rate)}, {}, "C*exp(b*x)");
}

}  // namespace frameasym::asymptotics
