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

#include "frameasym/specfun/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "frameasym/error.hpp"

namespace frameasym::specfun {

namespace {
const double kNorm = std::pow(2.0, 0.25);
}

double gaussian_window(double t) { return kNorm * std::exp(-std::numbers::pi * t * t); }

double hermite_he(int k, double x) {
  require(k >= 0, "hermite_he: negative order");
  if (k == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int n = 1; n < k; ++n) {
    const double p2 = x * p1 - n * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double gaussian_window_derivative(int k, double t) {
  if (k == 0) return gaussian_window(t);
  // d^k/dt^k e^{-pi t^2} = (-sqrt(2 pi))^k He_k(sqrt(2 pi) t) e^{-pi t^2}
  const double s = std::sqrt(2.0 * std::numbers::pi);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(s, k) * hermite_he(k, s * t) * gaussian_window(t);
}

std::complex<double> window_hat_complex(std::complex<double> zeta) {
  return kNorm * std::exp(-std::numbers::pi * zeta * zeta);
}

}  // namespace frameasym::specfun
