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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "frameasym/distributions/distribution.hpp"
#include "frameasym/error.hpp"
#include "frameasym/numerics/quadrature.hpp"
#include "frameasym/specfun/gaussian.hpp"
#include "frameasym/specfun/hermite.hpp"
#include "frameasym/specfun/meyer.hpp"

using namespace frameasym;

namespace {

// Composite Gauss-Legendre oracle, independent of the adaptive integrator.
cplx gl(const std::function<cplx(double)>& f, double a, double b, double panel = 0.01) {
  std::vector<double> x, w;
  numerics::composite_gauss(a, b, panel, 20, x, w);
  cplx s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
  return s;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TestFunction e_minus_t2() { return TestFunction::gaussian(0.0, std::sqrt(0.5)); }

}  // namespace

TEST(TestFunction, NormalFormEvaluation) {
  const auto g = TestFunction::gaussian(0.5, 0.8);
  EXPECT_NEAR(g(0.9).real(), std::exp(-0.16 / (2 * 0.64)), 1e-15);
  const auto h = TestFunction::hermite(3).affine(2.0, -1.0, 0.5).modulated(0.3);
  const double t = 0.7;
  const cplx ref = 0.5 * specfun::hermite_eval(3, 2 * t - 1) * std::polar(1.0, 2 * std::numbers::pi * 0.3 * t);
  EXPECT_LT(rel(h(t), ref), 1e-14);
  const auto hc = h.conjugated();
  EXPECT_LT(rel(hc(t), std::conj(ref)), 1e-14);
}

TEST(TestFunction, DerivativesOfModulatedAffineForm) {
  const auto h = TestFunction::gaussian_window().affine(1.3, 0.2).modulated(-0.4);
  for (int k = 1; k <= 3; ++k)
    for (double t : {-0.5, 0.3}) {
      const double e = 1e-5;
      const cplx fd = (h.derivative(k - 1, t + e) - h.derivative(k - 1, t - e)) / (2 * e);
      EXPECT_LT(std::abs(h.derivative(k, t) - fd), 1e-6 * std::pow(10.0, k));
    }
}

TEST(TestFunction, BatchMatchesPointwise) {
  const auto m = TestFunction::meyer_wavelet().affine(0.5, 2.0, 1.7);
  std::vector<double> t = {-3.0, 0.0, 1.1, 9.9};
  std::vector<cplx> out(t.size());
  m.eval_batch(t, out);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(out[i].real(), 1.7 * specfun::meyer_eval(0.5 * t[i] + 2.0), 1e-15);
}

TEST(TestFunction, FourierOfAffineModulatedForm) {
  const auto g = TestFunction::gaussian_window().affine(1.5, -0.6, 2.0).modulated(0.25);
  for (double xi : {-1.0, 0.0, 0.7}) {
    const cplx ref = gl([&](double t) { return g(t) * std::polar(1.0, -2 * std::numbers::pi * xi * t); }, -8, 8);
    EXPECT_LT(std::abs(g.fourier(xi) - ref), 1e-12);
  }
  const auto h = TestFunction::hermite(5).affine(0.7, 0.1);
  const cplx ref = gl([&](double t) { return h(t) * std::polar(1.0, -2 * std::numbers::pi * 0.3 * t); }, -30, 30);
  EXPECT_LT(std::abs(h.fourier(0.3) - ref), 1e-12);
}

TEST(TestFunction, SpectralGapTracksDilationAndModulation) {
  const auto m = TestFunction::meyer_wavelet();
  EXPECT_NEAR(m.spectral_gap(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.affine(3.0, 1.0).spectral_gap(), 1.0, 1e-15);
  EXPECT_NEAR(m.modulated(0.2).spectral_gap(), 1.0 / 3.0 - 0.2, 1e-15);
  EXPECT_EQ(m.modulated(0.5).spectral_gap(), 0.0);
  EXPECT_EQ(TestFunction::gaussian_window().spectral_gap(), 0.0);
}

TEST(Pair, DeltaDerivatives) {
  const auto psi = TestFunction::gaussian(0.3, 0.9);
  EXPECT_EQ(pair(Distribution::delta(0, 0.0), psi), psi(0.0));
  EXPECT_EQ(pair(Distribution::delta(1, 0.0), psi), -psi.derivative(1, 0.0));
  EXPECT_EQ(pair(Distribution::delta(2, 0.4), psi), psi.derivative(2, 0.4));
}

TEST(Pair, HalfPowerAgainstGaussian) {
  const cplx v = pair(Distribution::homogeneous(0.5, Side::plus), e_minus_t2());
  EXPECT_LT(rel(v, std::tgamma(0.75) / 2), 1e-10);
  EXPECT_NEAR(v.real(), 0.61270835, 1e-8);
}

TEST(Pair, HomogeneousPowersAgainstHermiteOracle) {
  for (double alpha : {-0.5, 0.5, 1.5})
    for (int n : {0, 3, 8}) {
      const auto psi = TestFunction::hermite(n);
      // substitution t = u^2 keeps the oracle integrand smooth
      const cplx ref = gl([&](double u) { return 2.0 * std::pow(u, 2 * alpha + 1) * specfun::hermite_eval(n, u * u); }, 0,
                          std::sqrt(40.0));
      const cplx v = pair(Distribution::homogeneous(alpha, Side::plus), psi);
      EXPECT_LT(std::abs(v - ref), 1e-9) << "alpha=" << alpha << " n=" << n;
      const cplx vm = pair(Distribution::homogeneous(alpha, Side::minus), psi);
      EXPECT_LT(std::abs(vm - ((n % 2) ? -ref : ref)), 1e-9);
    }
}

TEST(Pair, HomogeneousAgainstMeyerUsesExactSpectrum) {
  // Oracle: time-domain integral on a dilate whose tail beyond the table is
  // below 1e-7.
  const auto psi = TestFunction::meyer_wavelet().affine(4.0, -1.0);
  const cplx ref = gl([&](double u) { return 2.0 * u * u * psi(u * u); }, 0, std::sqrt(20.25), 0.002);
  const cplx v = pair(Distribution::homogeneous(0.5, Side::plus), psi);
  EXPECT_LT(std::abs(v - ref), 2e-7);
}

TEST(Pair, HomogeneityIdentity) {
  const auto psi = TestFunction::gaussian(0.4, 0.7);
  for (double alpha : {-0.5, 0.5, 1.5})
    for (Side side : {Side::plus, Side::minus, Side::abs}) {
      const auto g = Distribution::homogeneous(alpha, side);
      const cplx base = pair(g, psi);
      for (double a : {0.5, 2.0, 10.0}) {
        // <g(a x), psi> = a^{-1} <g, psi(./a)> computed by quadrature
        const cplx dil = pair(g, psi.affine(1.0 / a, 0.0, 1.0 / a));
        EXPECT_LT(rel(dil, std::pow(a, alpha) * base), 1e-10) << alpha << " " << side_name(side) << " " << a;
      }
    }
}

TEST(Pair, LinearityOfCombinations) {
  const auto psi = TestFunction::hermite(2).affine(1.1, 0.3);
  const auto f = Distribution::homogeneous(0.5, Side::abs);
  const auto g = Distribution::delta(1, 0.2);
  const auto h = Distribution::polynomial({1.0, -2.0, 0.5});
  const cplx a(2.0, -1.0), b(-0.5, 0.0), c(0.0, 3.0);
  const auto lc = Distribution::combination({{a, f}, {b, g}, {c, h}});
  const cplx ref = a * pair(f, psi) + b * pair(g, psi) + c * pair(h, psi);
  EXPECT_LT(rel(pair(lc, psi), ref), 1e-12);
}

TEST(Pair, ConjugateSymmetryForRealDistributions) {
  const auto psi = TestFunction::gaussian_window().affine(1.0, -0.5).modulated(0.8);
  const auto f = Distribution::regular([](double t) { return cplx(std::cos(t) + t * t); }, {GrowthKind::polynomial, 2}, {},
                                       "cos+t2");
  EXPECT_LT(std::abs(pair(f, psi.conjugated()) - std::conj(pair(f, psi))), 1e-13);
}

TEST(Pair, ExponentialGrowthNeedsK1) {
  const auto f = Distribution::regular([](double t) { return cplx(std::exp(2 * t)); }, {GrowthKind::exponential, 2});
  EXPECT_NO_THROW(pair(f, TestFunction::gaussian_window()));
  try {
    pair(f, TestFunction::meyer_wavelet());
    FAIL() << "expected ClassMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::class_mismatch);
  }
}

TEST(PairScaled, DeltaSubstitutionIsExact) {
  const auto psi = TestFunction::meyer_wavelet().affine(2.0, 1.0, std::sqrt(2.0));
  for (double eps : {0.5, 0.125, 1.0 / 1024}) {
    const ScaledDistribution s{Distribution::delta(0, 0.0), 0.0, eps, Regime::origin};
    EXPECT_EQ(pair_scaled(s, psi), psi(0.0) / eps);
    const ScaledDistribution s1{Distribution::delta(1, 0.3), 0.1, eps, Regime::origin};
    const cplx ref = -std::pow(eps, -2.0) * psi.derivative(1, 0.2 / eps);
    EXPECT_LT(std::abs(pair_scaled(s1, psi) - ref), 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST(PairScaled, HomogeneousInfinityRegimeIsExact) {
  const auto psi = TestFunction::hermite(4);
  const auto g = Distribution::homogeneous(0.5, Side::plus);
  const cplx base = pair(g, psi);
  for (double lam : {2.0, 8.0, 1024.0}) {
    const ScaledDistribution s{g, 0.0, lam, Regime::infinity};
    EXPECT_LT(rel(pair_scaled(s, psi), std::pow(lam, 0.5) * base), 1e-12);
  }
}

TEST(PairScaled, ShiftRegimeOfExponential) {
  const auto psi = TestFunction::gaussian(0.0, 0.6);
  const auto f = Distribution::regular([](double t) { return cplx(std::exp(2 * t)); }, {GrowthKind::exponential, 2});
  const ScaledDistribution s{f, 0.0, 3.0, Regime::shift};
  const cplx ref = std::exp(6.0) * gl([&](double u) { return std::exp(2 * u) * psi(u); }, -10, 10);
  EXPECT_LT(rel(pair_scaled(s, psi), ref), 1e-8);
}

TEST(PairScaled, ScalingMatchesDirectQuadratureForRegular) {
  const auto psi = TestFunction::gaussian(0.2, 1.0);
  const auto f = Distribution::regular([](double t) { return cplx(std::sin(3 * t) + 1.0); }, {GrowthKind::polynomial, 0});
  const double x0 = 0.7, eps = 0.3;
  const ScaledDistribution s{f, x0, eps, Regime::origin};
  const cplx ref = gl([&](double x) { return (std::sin(3 * (x0 + eps * x)) + 1.0) * psi(x); }, -10, 10);
  EXPECT_LT(rel(pair_scaled(s, psi), ref), 1e-10);
}

TEST(PairScaled, PolynomialsAreAnnihilatedByWavelets) {
  const auto p = Distribution::polynomial({3.0, 2.0, -1.0, 0.25});
  for (int m : {-3, 0, 3})
    for (int n : {-2, 0, 5}) {
      const auto psi = TestFunction::meyer_wavelet().affine(std::ldexp(1.0, m), -n, std::sqrt(std::ldexp(1.0, m)));
      const ScaledDistribution s{p, 0.4, 0.01, Regime::origin};
      EXPECT_EQ(pair_scaled(s, psi), cplx(0.0));
    }
  // ... but not by Gaussians: <1 + x, gaussian(c, sigma)> = sqrt(2 pi) sigma (1 + c)
  const auto g = TestFunction::gaussian(0.5, 1.0);
  EXPECT_LT(rel(pair(Distribution::polynomial({1.0, 1.0}), g), std::sqrt(2 * std::numbers::pi) * 1.5), 1e-12);
}

TEST(Seminorm, GaussianPeak) {
  const auto est = seminorm_estimate(TestFunction::gaussian_window(), 0, 20001);
  EXPECT_NEAR(est.value, std::pow(2.0, 0.25), 1e-12);
}

TEST(Seminorm, MeyerStableUnderRefinement) {
  const auto psi = TestFunction::meyer_wavelet();
  const double a = seminorm_estimate(psi, 2, 80001).value;
  const double b = seminorm_estimate(psi, 2, 160001).value;
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_LT(std::abs(a - b) / b, 1e-2);
}

TEST(Seminorm, CustomDerivativeBudget) {
  CustomBase cb;
  cb.value = [](double t) { return cplx(std::exp(-t * t)); };
  cb.support_lo = -7;
  cb.support_hi = 7;
  const auto psi = TestFunction::custom(cb);
  EXPECT_NEAR(psi.derivative(1, 0.5).real(), -std::exp(-0.25), 1e-9);
  EXPECT_NEAR(psi.derivative(2, 0.5).real(), (4 * 0.25 - 2) * std::exp(-0.25), 1e-6);
  EXPECT_NO_THROW(seminorm_estimate(psi, 2, 1001));
  try {
    seminorm_estimate(psi, 3, 1001);
    FAIL() << "expected DerivativeUnavailable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::derivative_unavailable);
  }
}

TEST(Moment, MeyerAndGaussian) {
  const auto m = TestFunction::meyer_wavelet();
  for (int k = 0; k <= 8; ++k) EXPECT_LT(std::abs(moment(m, k)), 1e-6);
  EXPECT_LT(rel(moment(TestFunction::gaussian_window(), 0), std::pow(2.0, 0.25)), 1e-12);
  // Second moment of e^{-t^2/2}: sqrt(2 pi)
  EXPECT_LT(rel(moment(TestFunction::gaussian(0, 1), 2), std::sqrt(2 * std::numbers::pi)), 1e-12);
}
