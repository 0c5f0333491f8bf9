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

#include <cmath>
#include <set>

#include "frameasym/error.hpp"
#include "frameasym/frames/frames.hpp"
#include "frameasym/parallel.hpp"

namespace frameasym::frames {

cplx stft(const Distribution& f, const TestFunction& w, double x, double xi, const PairOptions& opt) {
  return pair(f, w.affine(1.0, -x).conjugated().modulated(-xi), opt);
}

CoeffGrid gabor_coeffs(const ScaledDistribution& s, const GaborSystem& G, const PairOptions& opt) {
  require(G.n_max >= 0 && G.m_max >= 0, "Gabor index box must be nonempty");
  require(G.alpha > 0.0 && G.beta > 0.0, "Gabor lattice steps must be positive");
  CoeffGrid grid;
  grid.system = "gabor";
  grid.index1_name = "n";
  grid.index2_name = "m";
  grid.scale = s.scale;
  grid.regime = s.regime;
  for (int n = -G.n_max; n <= G.n_max; ++n)
    for (int m = -G.m_max; m <= G.m_max; ++m) grid.indices.push_back({n, m});
  grid.values.resize(grid.indices.size());
  if (s.base.is_zero()) return grid;
  parallel_for(grid.indices.size(), [&](std::size_t k) {
    const auto [n, m] = grid.indices[k];
    grid.values[k] = pair_scaled(s, gabor_element(G, n, m).conjugated(), opt);
  });
  return grid;
}

CoeffGrid gabor_coeffs(const Distribution& f, const GaborSystem& G, const PairOptions& opt) {
  return gabor_coeffs(ScaledDistribution{f, 0.0, 1.0, Regime::origin}, G, opt);
}

CoeffGrid wavelet_coeffs(const Distribution& f, const WaveletSystem& W, double eps, double x0, Regime regime,
                         const PairOptions& opt) {
  require(W.m_min <= W.m_max && W.n_max >= 0, "wavelet index box must be nonempty");
  require(eps > 0.0, "scale must be positive");
  const ScaledDistribution s{f, x0, eps, regime};
  CoeffGrid grid;
  grid.system = "wavelet";
  grid.index1_name = "m";
  grid.index2_name = "n";
  grid.scale = eps;
  grid.regime = regime;
  for (int m = W.m_min; m <= W.m_max; ++m)
    for (int n = -W.n_max; n <= W.n_max; ++n) grid.indices.push_back({m, n});
  grid.values.resize(grid.indices.size());
  if (W.scaling_closure) {
    grid.closure_level = W.m_min;
    for (int n = -W.n_max; n <= W.n_max; ++n) grid.closure_n.push_back(n);
    grid.closure_values.resize(grid.closure_n.size());
  }
  if (f.is_zero()) return grid;
  const std::size_t main = grid.indices.size();
  parallel_for(main + grid.closure_n.size(), [&](std::size_t k) {
    if (k < main) {
      const auto [m, n] = grid.indices[k];
      grid.values[k] = pair_scaled(s, wavelet_element(m, n), opt);
    } else {
      const int n = grid.closure_n[k - main];
      grid.closure_values[k - main] = pair_scaled(s, scaling_element(W.m_min, n), opt);
    }
  });
  return grid;
}

CoeffGrid hermite_frame_coeffs(const Distribution& f, const HermiteFrame& F, double eps, double x0, Regime regime,
                               const PairOptions& opt) {
  require(F.M.rows() >= 1 && F.M.cols() >= 1, "Hermite frame matrix is empty");
  require(eps > 0.0, "scale must be positive");
  const ScaledDistribution s{f, x0, eps, regime};
  CoeffGrid grid;
  grid.system = "hermite";
  grid.index1_name = "n";
  grid.index2_name = "unused";
  grid.scale = eps;
  grid.regime = regime;
  const int rows = static_cast<int>(F.M.rows()), cols = static_cast<int>(F.M.cols());
  for (int n = 1; n <= rows; ++n) grid.indices.push_back({n, 0});
  grid.values.resize(rows);
  if (f.is_zero()) return grid;
  std::vector<int> used;
  for (int j = 0; j < cols; ++j)
    if ((F.M.col(j).array() != 0.0).any()) used.push_back(j);
  std::vector<cplx> p(static_cast<std::size_t>(cols), 0.0);
  parallel_for(used.size(), [&](std::size_t k) {
    const int j = used[k];
    p[j] = pair_scaled(s, TestFunction::hermite(j), opt);
  });
  for (int r = 0; r < rows; ++r) {
    cplx acc = 0.0;
    for (int j : used)
      if (F.M(r, j) != 0.0) acc += F.M(r, j) * p[j];
    grid.values[r] = acc;
  }
  return grid;
}

CoeffGrid frame_coeffs(const ScaledDistribution& s, const FrameSystem& F, const PairOptions& opt) {
  return std::visit(
      [&](const auto& sys) -> CoeffGrid {
        using T = std::decay_t<decltype(sys)>;
        if constexpr (std::is_same_v<T, GaborSystem>) {
          return gabor_coeffs(s, sys, opt);
        } else if constexpr (std::is_same_v<T, WaveletSystem>) {
          return wavelet_coeffs(s.base, sys, s.scale, s.center, s.regime, opt);
        } else {
          return hermite_frame_coeffs(s.base, sys, s.scale, s.center, s.regime, opt);
        }
      },
      F);
}

}  // namespace frameasym::frames
