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

#include "frameasym/specfun/meyer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "frameasym/error.hpp"
#include "frameasym/parallel.hpp"

namespace frameasym::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
// Period of the frequency sampling. Sampling the transform at l/T gives the
// T-periodization of the time function exactly, and the wavelet has decayed
// far below table accuracy at distance T - 80.
constexpr double kPeriod = 320.0;
constexpr int kIntervals = 1 << 16;
constexpr int kOrders = kMeyerTableOrders + 1;

double amp_wavelet(double a) {
  if (a < 1.0 / 3.0 || a > 4.0 / 3.0) return 0.0;
  if (a <= 2.0 / 3.0) return std::sin(0.5 * kPi * meyer_nu(3.0 * a - 1.0));
  return std::cos(0.5 * kPi * meyer_nu(1.5 * a - 1.0));
}

// Frequency samples l/T with nonzero amplitude, with weights amp * xi^k.
struct Spectrum {
  int l0 = 0;
  std::vector<std::array<double, kOrders + 1>> w;  // up to order kOrders
  double center = 0.0;
  bool has_dc = false;
  double dc = 0.0;
};

Spectrum make_spectrum(bool wavelet) {
  Spectrum sp;
  const double band = wavelet ? kMeyerBand : kMeyerScalingBand;
  sp.l0 = 1;
  const int l1 = static_cast<int>(std::ceil(band * kPeriod));
  sp.center = wavelet ? kMeyerCenter : 0.0;
  if (!wavelet) {
    sp.has_dc = true;
    sp.dc = meyer_scaling_hat(0.0);
  }
  for (int l = 1; l <= l1; ++l) {
    const double xi = l / kPeriod;
    const double a = wavelet ? amp_wavelet(xi) : meyer_scaling_hat(xi);
    std::array<double, kOrders + 1> row{};
    double p = 1.0;
    for (int k = 0; k <= kOrders; ++k) {
      row[k] = a * p;
      p *= xi;
    }
    sp.w.push_back(row);
  }
  return sp;
}

const Spectrum& spectrum(bool wavelet) {
  static const Spectrum wav = make_spectrum(true);
  static const Spectrum sca = make_spectrum(false);
  return wavelet ? wav : sca;
}

// Re[(2 pi i)^k z]
double rotate_real(int k, std::complex<double> z) {
  const double scale = std::pow(2.0 * kPi, k);
  switch (k % 4) {
    case 0: return scale * z.real();
    case 1: return -scale * z.imag();
    case 2: return -scale * z.real();
    default: return scale * z.imag();
  }
}

// Values of orders 0..n_orders-1 at t.
void spectral_values(const Spectrum& sp, double t, int n_orders, double* out) {
  const double s = t - sp.center;
  std::array<std::complex<double>, kOrders + 1> acc{};
  const double step = 2.0 * kPi * s / kPeriod;
  const std::complex<double> rot = std::polar(1.0, step);
  std::complex<double> z;
  for (std::size_t i = 0; i < sp.w.size(); ++i) {
    const int l = sp.l0 + static_cast<int>(i);
    if (i % 16 == 0) {
      z = std::polar(1.0, std::fmod(step * l, 2.0 * kPi));
    } else {
      z *= rot;
    }
    const auto& row = sp.w[i];
    if (row[0] == 0.0) continue;
    for (int k = 0; k < n_orders; ++k) acc[k] += row[k] * z;
  }
  for (int k = 0; k < n_orders; ++k) {
    double v = 2.0 / kPeriod * rotate_real(k, acc[k]);
    if (k == 0 && sp.has_dc) v += sp.dc / kPeriod;
    out[k] = v;
  }
}

struct Tables {
  std::array<kernels::CubicTable, kMeyerTableOrders> t;
};

Tables build_tables(bool wavelet) {
  const Spectrum& sp = spectrum(wavelet);
  const double x0 = -kMeyerTableRadius;
  const double dx = 2.0 * kMeyerTableRadius / kIntervals;
  const std::size_t nodes = kIntervals + 1;
  std::vector<double> vals(nodes * kOrders);
  parallel_for(nodes, [&](std::size_t j) {
    spectral_values(sp, x0 + dx * static_cast<double>(j), kOrders, &vals[j * kOrders]);
  });
  Tables tab;
  std::vector<double> v(nodes), d(nodes);
  for (int k = 0; k < kMeyerTableOrders; ++k) {
    for (std::size_t j = 0; j < nodes; ++j) {
      v[j] = vals[j * kOrders + k];
      d[j] = vals[j * kOrders + k + 1];
    }
    tab.t[k] = kernels::CubicTable::from_hermite(x0, dx, v, d);
  }
  return tab;
}

const Tables& tables(bool wavelet) {
  if (wavelet) {
    static const Tables w = build_tables(true);
    return w;
  }
  static const Tables s = build_tables(false);
  return s;
}

double table_eval(const kernels::CubicTable& tab, double t) {
  double out;
  kernels::scalar_kernels().cubic_eval(tab, &t, 1, &out);
  return out;
}

double direct(bool wavelet, int k, double t) {
  require(k >= 0, "Meyer derivative order must be nonnegative");
  const Spectrum& sp = spectrum(wavelet);
  std::complex<double> acc = 0.0;
  const double s = t - sp.center;
  for (std::size_t i = 0; i < sp.w.size(); ++i) {
    const double xi = (sp.l0 + static_cast<double>(i)) / kPeriod;
    const double a = sp.w[i][0];
    if (a == 0.0) continue;
    acc += a * std::pow(xi, k) * std::polar(1.0, std::fmod(2.0 * kPi * xi * s, 2.0 * kPi));
  }
  double v = 2.0 / kPeriod * rotate_real(k, acc);
  if (k == 0 && sp.has_dc) v += sp.dc / kPeriod;
  return v;
}

}  // namespace

double meyer_nu(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double t2 = t * t;
  return t2 * t2 * (35.0 - 84.0 * t + 70.0 * t2 - 20.0 * t2 * t);
}

double meyer_hat_abs(double xi) { return amp_wavelet(std::abs(xi)); }

std::complex<double> meyer_hat(double xi) {
  const double a = meyer_hat_abs(xi);
  if (a == 0.0) return 0.0;
  return a * std::polar(1.0, -kPi * xi);
}

double meyer_scaling_hat(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.0 / 3.0) return 1.0;
  if (a >= 2.0 / 3.0) return 0.0;
  return std::cos(0.5 * kPi * meyer_nu(3.0 * a - 1.0));
}

const kernels::CubicTable& meyer_table(int k) {
  require(k >= 0 && k < kMeyerTableOrders, "Meyer table order out of range");
  return tables(true).t[k];
}

const kernels::CubicTable& meyer_scaling_table(int k) {
  require(k >= 0 && k < kMeyerTableOrders, "Meyer table order out of range");
  return tables(false).t[k];
}

double meyer_eval(double t) { return table_eval(meyer_table(0), t); }

double meyer_derivative(int k, double t) {
  if (k < kMeyerTableOrders) return table_eval(meyer_table(k), t);
  if (std::abs(t) > kMeyerTableRadius) return 0.0;
  return direct(true, k, t);
}

double meyer_scaling_eval(double t) { return table_eval(meyer_scaling_table(0), t); }

double meyer_scaling_derivative(int k, double t) {
  if (k < kMeyerTableOrders) return table_eval(meyer_scaling_table(k), t);
  if (std::abs(t) > kMeyerTableRadius) return 0.0;
  return direct(false, k, t);
}

double meyer_direct(int k, double t) { return direct(true, k, t); }
double meyer_scaling_direct(int k, double t) { return direct(false, k, t); }

void meyer_warmup() {
  (void)tables(true);
  (void)tables(false);
}

}  // namespace frameasym::specfun
