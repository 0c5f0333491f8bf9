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

#include "frameasym/specfun/hermite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "frameasym/error.hpp"
#include "frameasym/kernels/kernels.hpp"

namespace frameasym::specfun {

void hermite_all(double t, std::span<double> out) {
  if (out.empty()) return;
  if (std::abs(t) <= kernels::kHermiteUnscaledLimit &&
      out.size() <= static_cast<std::size_t>(kernels::kMaxHermiteOrder)) {
    kernels::scalar_kernels().hermite_block(&t, 1, static_cast<int>(out.size()), out.data(), 1);
    return;
  }
  kernels::hermite_column_scaled(t, out);
}

double hermite_eval(int n, double t) {
  require(n >= 0, "hermite_eval: negative index");
  std::vector<double> col(static_cast<std::size_t>(n) + 1);
  hermite_all(t, col);
  return col.back();
}

std::vector<double> hermite_derivative_coeffs(int n, int k) {
  require(n >= 0 && k >= 0, "hermite_derivative_coeffs: negative argument");
  // cur[i] is the coefficient of h_{n-k+i}; start from the delta at index k.
  const int w = 2 * k + 1;
  std::vector<double> cur(static_cast<std::size_t>(w), 0.0), next(cur.size());
  cur[k] = 1.0;
  const int base = n - k;
  for (int step = 0; step < k; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int i = 0; i < w; ++i) {
      if (cur[i] == 0.0) continue;
      const int j = base + i;
      if (j < 0) continue;
      if (j >= 1 && i >= 1) next[i - 1] += cur[i] * std::sqrt(j / 2.0);
      if (i + 1 < w) next[i + 1] -= cur[i] * std::sqrt((j + 1) / 2.0);
    }
    cur.swap(next);
  }
  return cur;
}

double hermite_derivative(int n, int k, double t) {
  if (k == 0) return hermite_eval(n, t);
  const auto c = hermite_derivative_coeffs(n, k);
  std::vector<double> col(static_cast<std::size_t>(n + k) + 1);
  hermite_all(t, col);
  double s = 0.0;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    const int j = n - k + i;
    if (j >= 0) s += c[i] * col[j];
  }
  return s;
}

namespace {

std::unique_ptr<GaussHermiteRule> build_rule(int n) {
  auto rule = std::make_unique<GaussHermiteRule>();
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  rule->nodes.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::vector<double> col(static_cast<std::size_t>(n) + 1);
  for (double& x : rule->nodes) {
    for (int it = 0; it < 3; ++it) {
      hermite_all(x, col);
      const double hn = col[n];
      const double dh = std::sqrt(2.0 * n) * col[n - 1] - x * hn;
      if (dh == 0.0) break;
      x -= hn / dh;
    }
  }
  // Symmetrize so that nodes are exactly antisymmetric.
  for (int i = 0; i < n / 2; ++i) {
    const double m = 0.5 * (rule->nodes[n - 1 - i] - rule->nodes[i]);
    rule->nodes[i] = -m;
    rule->nodes[n - 1 - i] = m;
  }
  if (n % 2 == 1) rule->nodes[n / 2] = 0.0;
  rule->weights.resize(n);
  rule->scaled.resize(n);
  for (int i = 0; i < n; ++i) {
    hermite_all(rule->nodes[i], std::span<double>(col.data(), n));
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += col[k] * col[k];
    rule->scaled[i] = 1.0 / s;
    rule->weights[i] = rule->scaled[i] * std::exp(-rule->nodes[i] * rule->nodes[i]);
  }
  return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int n) {
  require(n >= 1 && n < kernels::kMaxHermiteOrder, "gauss_hermite: node count out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_rule(n);
  return *slot;
}

}  // namespace frameasym::specfun
