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
#include <cstring>
#include <random>
#include <vector>

#include "frameasym/kernels/kernels.hpp"
#include "frameasym/specfun/meyer.hpp"

using namespace frameasym;

namespace {

std::vector<double> random_vector(std::size_t n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

const kernels::KernelSet* simd() { return kernels::avx2_kernels(); }

}  // namespace

TEST(Kernels, ScalarDotMatchesNaiveSum) {
  const auto a = random_vector(1003, -1, 1, 1);
  const auto b = random_vector(1003, -1, 1, 2);
  long double ref = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ref += static_cast<long double>(a[i]) * b[i];
  EXPECT_NEAR(kernels::scalar_kernels().dot(a.data(), b.data(), a.size()), static_cast<double>(ref), 1e-12);
}

TEST(Kernels, DotBitwiseEqualAcrossIsa) {
  if (!simd()) GTEST_SKIP() << "no AVX2 variant on this machine";
  for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 64u, 1001u}) {
    const auto a = random_vector(n, -3, 3, 10 + n);
    const auto b = random_vector(n, -3, 3, 20 + n);
    const double s = kernels::scalar_kernels().dot(a.data(), b.data(), n);
    const double v = simd()->dot(a.data(), b.data(), n);
    EXPECT_EQ(std::memcmp(&s, &v, sizeof(double)), 0) << "n=" << n;
  }
}

TEST(Kernels, HermiteBlockBitwiseEqualAcrossIsa) {
  if (!simd()) GTEST_SKIP() << "no AVX2 variant on this machine";
  for (std::size_t count : {1u, 4u, 5u, 37u}) {
    const auto t = random_vector(count, -20, 20, 30 + count);
    const int orders = 97;
    std::vector<double> s(count * orders), v(count * orders);
    kernels::scalar_kernels().hermite_block(t.data(), count, orders, s.data(), count);
    simd()->hermite_block(t.data(), count, orders, v.data(), count);
    EXPECT_TRUE(bitwise_equal(s, v)) << "count=" << count;
  }
}

TEST(Kernels, HermiteSeriesBitwiseEqualAcrossIsa) {
  if (!simd()) GTEST_SKIP() << "no AVX2 variant on this machine";
  const auto c = random_vector(65, -1, 1, 41);
  const auto t = random_vector(203, -12, 12, 42);
  std::vector<double> s(t.size()), v(t.size());
  kernels::scalar_kernels().hermite_series(c.data(), 65, t.data(), t.size(), s.data());
  simd()->hermite_series(c.data(), 65, t.data(), t.size(), v.data());
  EXPECT_TRUE(bitwise_equal(s, v));
}

TEST(Kernels, HermiteSeriesMatchesBlockContraction) {
  const auto c = random_vector(33, -1, 1, 51);
  const auto t = random_vector(50, -6, 6, 52);
  std::vector<double> blk(t.size() * 33), ser(t.size());
  kernels::hermite_block(t, 33, blk);
  kernels::hermite_series(c, t, ser);
  for (std::size_t i = 0; i < t.size(); ++i) {
    double s = 0;
    for (int k = 0; k < 33; ++k) s += c[k] * blk[k * t.size() + i];
    EXPECT_NEAR(ser[i], s, 1e-13);
  }
}

TEST(Kernels, CubicEvalBitwiseEqualAcrossIsa) {
  if (!simd()) GTEST_SKIP() << "no AVX2 variant on this machine";
  const auto& tab = specfun::meyer_table(1);
  auto x = random_vector(1001, -90, 90, 61);
  x[0] = -80.0;
  x[1] = 80.0;
  x[2] = std::nan("");
  std::vector<double> s(x.size()), v(x.size());
  kernels::scalar_kernels().cubic_eval(tab, x.data(), x.size(), s.data());
  simd()->cubic_eval(tab, x.data(), x.size(), v.data());
  EXPECT_TRUE(bitwise_equal(s, v));
  EXPECT_EQ(s[2], 0.0);
}

TEST(Kernels, CubicTableReproducesCubics) {
  // A cubic with exact slopes is reproduced exactly by Hermite segments.
  auto p = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x * x; };
  auto dp = [](double x) { return -2.0 + 1.5 * x * x; };
  std::vector<double> v, d;
  for (int i = 0; i <= 10; ++i) {
    v.push_back(p(-1.0 + 0.2 * i));
    d.push_back(dp(-1.0 + 0.2 * i));
  }
  const auto tab = kernels::CubicTable::from_hermite(-1.0, 0.2, v, d);
  std::vector<double> x = {-1.0, -0.77, 0.0, 0.31, 0.999, 1.0, 1.01};
  std::vector<double> y(x.size());
  kernels::cubic_eval(tab, x, y);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) EXPECT_NEAR(y[i], p(x[i]), 1e-13);
  EXPECT_EQ(y.back(), 0.0);
}

TEST(Kernels, ScaledHermiteColumnAgreesWithPlainRecurrence) {
  std::vector<double> a(200), b(200);
  for (double t : {-25.0, -3.0, 0.0, 1.7, 25.0}) {
    kernels::scalar_kernels().hermite_block(&t, 1, 200, a.data(), 1);
    kernels::hermite_column_scaled(t, b);
    for (int k = 0; k < 200; ++k) EXPECT_NEAR(a[k], b[k], 1e-13) << "t=" << t << " k=" << k;
  }
}

TEST(Kernels, LargeArgumentHermiteIsFinite) {
  std::vector<double> t = {-50.0, 30.0, 50.0, 1e3};
  std::vector<double> out(t.size() * 513);
  kernels::hermite_block(t, 513, out);
  for (double v : out) EXPECT_TRUE(std::isfinite(v));
}
