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
#include <span>
#include <vector>

namespace frameasym::numerics {

using cplx = std::complex<double>;

/// Batch integrand: fills out[i] with the integrand at t[i].
using BatchIntegrand = std::function<void(std::span<const double> t, std::span<cplx> out)>;

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  /// Maximum number of bisections applied to an initial panel.
  int max_depth = 20;
  /// Initial panels per segment between consecutive breakpoints.
  int initial_panels = 4;
  /// Hard cap on integrand evaluations.
  long max_evaluations = 4'000'000;
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double error = 0.0;
  int intervals = 0;
  int evaluations = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod integration over the segments
/// defined by consecutive entries of `points` (sorted, at least two).
/// Throws QuadratureNonConvergence when an interval at the depth limit
/// still carries error above the requested tolerance.
QuadResult integrate(const BatchIntegrand& f, std::span<const double> points, const QuadOptions& opt = {});

QuadResult integrate(const BatchIntegrand& f, double a, double b, const QuadOptions& opt = {});

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (cached).
const GaussRule& gauss_legendre(int n);

/// Composite Gauss-Legendre nodes/weights on [a,b] with panels of width at
/// most `panel` and `order` nodes each.
void composite_gauss(double a, double b, double panel, int order, std::vector<double>& nodes,
                     std::vector<double>& weights);

}  // namespace frameasym::numerics
