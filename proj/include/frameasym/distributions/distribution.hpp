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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frameasym/distributions/test_function.hpp"
#include "frameasym/numerics/quadrature.hpp"

namespace frameasym {

enum class GrowthKind { polynomial, exponential };

struct Growth {
  GrowthKind kind = GrowthKind::polynomial;
  /// Polynomial order, or exponential rate.
  double value = 0.0;
};

enum class Side { plus, minus, abs };

std::string_view side_name(Side s);

struct RegularFunction {
  /// Batch evaluator t -> f(t).
  std::function<void(std::span<const double>, std::span<cplx>)> eval;
  Growth growth;
  /// Support of f when bounded; the pairing integrates over its
  /// intersection with the test-function support.
  std::optional<std::pair<double, double>> support;
  /// Points where f is not smooth (kinks, integrable singularities).
  std::vector<double> breakpoints;
  bool real = true;
  std::string label = "regular";
};

struct DeltaDerivative {
  int order = 0;
  double point = 0.0;
};

/// x_+^alpha, x_-^alpha or |x|^alpha with alpha > -1.
struct HomogeneousPower {
  double alpha = 0.0;
  Side side = Side::plus;
};

/// sum_j coeffs[j] x^j
struct Polynomial {
  std::vector<double> coeffs;
};

class Distribution;

struct LinearCombination {
  std::vector<std::pair<cplx, Distribution>> terms;
};

/// Generalized function given by its pairing rule. Values are immutable and
/// cheap to copy (shared representation).
class Distribution {
 public:
  using Variant = std::variant<RegularFunction, DeltaDerivative, HomogeneousPower, Polynomial, LinearCombination>;

  Distribution();  // the zero distribution
  static Distribution zero();
  static Distribution regular(RegularFunction f);
  /// Convenience: pointwise evaluator.
  static Distribution regular(std::function<cplx(double)> f, Growth growth,
                              std::vector<double> breakpoints = {}, std::string label = "regular");
  static Distribution delta(int order = 0, double point = 0.0);
  static Distribution homogeneous(double alpha, Side side);
  static Distribution polynomial(std::vector<double> coeffs);
  static Distribution combination(std::vector<std::pair<cplx, Distribution>> terms);

  const Variant& variant() const { return *rep_; }
  bool is_zero() const;
  std::string describe() const;

  Distribution operator+(const Distribution& other) const;
  Distribution scaled(cplx c) const;

 private:
  explicit Distribution(Variant v);
  std::shared_ptr<const Variant> rep_;
};

enum class Regime { origin, infinity, shift };

std::string_view regime_name(Regime r);

/// f(x0 + scale * x) (origin / infinity) or f(x + scale) (shift).
struct ScaledDistribution {
  Distribution base;
  double center = 0.0;
  double scale = 1.0;
  Regime regime = Regime::origin;
};

struct PairOptions {
  numerics::QuadOptions quad;
};

/// <f, psi>.
cplx pair(const Distribution& f, const TestFunction& psi, const PairOptions& opt = {});

/// <f(x0 + eps .), psi>, or <f(. + h), psi> in the shift regime.
cplx pair_scaled(const ScaledDistribution& s, const TestFunction& psi, const PairOptions& opt = {});

struct SeminormEstimate {
  double value = 0.0;
  int grid_points = 0;
  double spacing = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Lower estimate of the order-k seminorm on a uniform grid over the
/// support: polynomial weights (1+x^2)^{k/2} for S and S0, e^{k|x|} for K1.
SeminormEstimate seminorm_estimate(const TestFunction& psi, int k, int grid_points = 160001);

/// int t^n psi(t) dt.
cplx moment(const TestFunction& psi, int n, const numerics::QuadOptions& opt = {});

/// Distribution value of a regular function at t (for probing/plotting).
cplx regular_value(const RegularFunction& f, double t);

}  // namespace frameasym
