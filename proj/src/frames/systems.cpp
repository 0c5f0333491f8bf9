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

#include <charconv>
#include <random>
#include <cmath>

#include "frameasym/error.hpp"
#include "frameasym/format.hpp"
#include "frameasym/frames/frames.hpp"

namespace frameasym::frames {

double uniform01(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

HermiteFrame HermiteFrame::identity(int n) {
  require(n >= 1, "Hermite frame needs at least one element");
  HermiteFrame F;
  F.M = Eigen::MatrixXd::Identity(n, n);
  F.bandwidth = 0;
  return F;
}

HermiteFrame HermiteFrame::banded_random(int n, int bandwidth, std::uint64_t seed) {
  require(n >= 1 && bandwidth >= 0, "banded Hermite frame: bad size");
  std::mt19937_64 rng(seed);
  HermiteFrame F;
  F.M = Eigen::MatrixXd::Zero(n, n);
  F.bandwidth = bandwidth;
  const double amp = bandwidth > 0 ? 0.25 / bandwidth : 0.0;
  // Row-major draw order so a seed fixes the matrix independently of layout.
  for (int r = 0; r < n; ++r)
    for (int j = std::max(0, r - bandwidth); j <= std::min(n - 1, r + bandwidth); ++j) {
      if (j == r) {
        F.M(r, j) = 1.0;
      } else {
        F.M(r, j) = amp * (2.0 * uniform01(rng()) - 1.0);
      }
    }
  return F;
}

HermiteFrame HermiteFrame::duplicated_tight(int n) {
  require(n >= 1, "Hermite frame needs at least one element");
  HermiteFrame F;
  F.M = Eigen::MatrixXd::Zero(2 * n, n);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j) {
    F.M(2 * j, j) = s;
    F.M(2 * j + 1, j) = s;
  }
  F.bandwidth = 0;
  return F;
}

std::string_view system_name(const FrameSystem& F) {
  switch (F.index()) {
    case 0: return "gabor";
    case 1: return "wavelet";
    default: return "hermite";
  }
}

TestFunction gabor_element(const GaborSystem& G, int n, int m) {
  return G.window.affine(1.0, -G.alpha * n).modulated(G.beta * m);
}

TestFunction wavelet_element(int m, int n) {
  const double a = std::ldexp(1.0, m);
  return TestFunction::meyer_wavelet().affine(a, -static_cast<double>(n), std::sqrt(a));
}

TestFunction scaling_element(int m, int n) {
  const double a = std::ldexp(1.0, m);
  return TestFunction::meyer_scaling().affine(a, -static_cast<double>(n), std::sqrt(a));
}

long CoeffGrid::find(int i1, int i2) const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k][0] == i1 && indices[k][1] == i2) return static_cast<long>(k);
  return -1;
}

cplx CoeffGrid::at(int i1, int i2) const {
  const long k = find(i1, i2);
  require(k >= 0, "coefficient index not in grid");
  return values[static_cast<std::size_t>(k)];
}

std::string CoeffGrid::to_csv() const {
  std::string out = "index1,index2,scale,re,im\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    append_int(out, indices[k][0]);
    out += ',';
    append_int(out, indices[k][1]);
    out += ',';
    append_number(out, scale);
    out += ',';
    append_number(out, values[k].real());
    out += ',';
    append_number(out, values[k].imag());
    out += '\n';
  }
  return out;
}

}  // namespace frameasym::frames
