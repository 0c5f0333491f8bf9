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

#include "frameasym/kernels/kernels.hpp"

namespace frameasym::specfun {

/// Auxiliary polynomial t^4 (35 - 84 t + 70 t^2 - 20 t^3), clamped to [0,1].
double meyer_nu(double t);

/// Fourier transform of the Meyer wavelet (ordinary frequency).
std::complex<double> meyer_hat(double xi);

/// |meyer_hat(xi)|.
double meyer_hat_abs(double xi);

/// Transform of the Meyer scaling function (real and even).
double meyer_scaling_hat(double xi);

/// Meyer wavelet in time. Orders 0..4 come from cached cubic tables on
/// [-80, 80]; values outside the table are 0. Higher orders are summed
/// directly from the frequency samples.
double meyer_eval(double t);
double meyer_derivative(int k, double t);

/// Same for the Meyer scaling function.
double meyer_scaling_eval(double t);
double meyer_scaling_derivative(int k, double t);

/// The Meyer wavelet is symmetric about this point.
inline constexpr double kMeyerCenter = 0.5;
/// Half-width of the cached time-domain tables.
inline constexpr double kMeyerTableRadius = 80.0;
/// Spectral gap: the wavelet transform vanishes on (-1/3, 1/3).
inline constexpr double kMeyerGap = 1.0 / 3.0;
/// Frequency support radii.
inline constexpr double kMeyerBand = 4.0 / 3.0;
inline constexpr double kMeyerScalingBand = 2.0 / 3.0;

/// Highest derivative order served from tables.
inline constexpr int kMeyerTableOrders = 5;

/// Direct frequency-sum evaluation (slow, reference path).
double meyer_direct(int k, double t);
double meyer_scaling_direct(int k, double t);

/// Cached cubic table for derivative order k < kMeyerTableOrders.
const kernels::CubicTable& meyer_table(int k);
const kernels::CubicTable& meyer_scaling_table(int k);

/// Forces construction of the tables (otherwise built on first use).
void meyer_warmup();

}  // namespace frameasym::specfun
