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

#include <span>
#include <vector>

namespace frameasym::specfun {

/// Orthonormal Hermite function h_n(t) = (2^n n! sqrt(pi))^{-1/2} H_n(t) e^{-t^2/2}.
/// Stable for any finite t; never NaN.
double hermite_eval(int n, double t);

/// h_0(t), ..., h_{out.size()-1}(t).
void hermite_all(double t, std::span<double> out);

/// k-th derivative of h_n at t, via the ladder relation
/// h_n' = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}.
double hermite_derivative(int n, int k, double t);

/// Coefficients c_j, j = n-k..n+k, with h_n^{(k)} = sum_j c_j h_j. Entry
/// offset i corresponds to j = n - k + i; entries with j < 0 are zero.
std::vector<double> hermite_derivative_coeffs(int n, int k);

struct GaussHermiteRule {
  std::vector<double> nodes;
  /// Weights for the weight function e^{-t^2}.
  std::vector<double> weights;
  /// Weights for plain integrals: sum scaled[i] f(nodes[i]) ~ int f for
  /// f = polynomial * e^{-t^2}, computed without forming e^{t^2}.
  std::vector<double> scaled;
};

/// N-point Gauss-Hermite rule (Golub-Welsch followed by Newton polishing).
const GaussHermiteRule& gauss_hermite(int n);

}  // namespace frameasym::specfun
