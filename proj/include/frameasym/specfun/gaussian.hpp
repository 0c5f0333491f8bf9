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

namespace frameasym::specfun {

/// Unit-norm Gaussian window 2^{1/4} e^{-pi t^2}.
double gaussian_window(double t);

/// k-th derivative of the window.
double gaussian_window_derivative(int k, double t);

/// Entire continuation of the window transform, 2^{1/4} e^{-pi zeta^2}.
std::complex<double> window_hat_complex(std::complex<double> zeta);

/// Probabilists' Hermite polynomial He_k(x).
double hermite_he(int k, double x);

}  // namespace frameasym::specfun
