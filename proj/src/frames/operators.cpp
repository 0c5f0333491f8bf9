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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "frameasym/error.hpp"
#include "frameasym/frames/frames.hpp"
#include "frameasym/kernels/kernels.hpp"
#include "frameasym/numerics/quadrature.hpp"
#include "frameasym/specfun/meyer.hpp"

namespace frameasym::frames {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingular = 1e-12;
constexpr int kMaxReference = 4096;

struct Extremes {
  double lo, hi;
};

Extremes extremes(const Eigen::VectorXd& ev) { return {ev.minCoeff(), ev.maxCoeff()}; }

void check_nonsingular(Extremes e, std::string_view what) {
  if (!(e.hi > 0.0) || e.lo < kSingular * e.hi)
    fail(ErrorCode::singular_section, std::string(what) + ": lower frame bound numerically zero (lambda_min = " +
                                          std::to_string(e.lo) + ", lambda_max = " + std::to_string(e.hi) + ")");
}

// ---------------------------------------------------------------- Gabor

// Time-frequency symmetric Hermite functions are concentrated on discs of
// radius sqrt((2j+1)/(2 pi)) in the time-frequency plane; keep those well
// inside the box.
int reference_dim(const GaborSystem& G, int n_max, int m_max) {
  const double rho = 0.75 * std::min(n_max * G.alpha, m_max * G.beta);
  const int K = static_cast<int>(std::floor((2.0 * kPi * rho * rho - 1.0) / 2.0));
  return std::clamp(K, 1, kMaxReference);
}

struct GaborCompression {
  Eigen::MatrixXcd G;  // G(row, i) = (H_i, g_row)_{L2}
  std::vector<std::array<int, 2>> rows;
  int K = 0;
};

double reference_radius(int K) { return (std::sqrt(2.0 * K + 1.0) + 9.5) / std::sqrt(2.0 * kPi); }

GaborCompression gabor_compress(const GaborSystem& G, int n_max, int m_max, int K) {
  GaborCompression out;
  out.K = K;
  const auto [wlo, whi] = G.window.support();
  const double lo = std::min(-n_max * G.alpha + wlo, -reference_radius(K));
  const double hi = std::max(n_max * G.alpha + whi, reference_radius(K));
  std::vector<double> t, w;
  numerics::composite_gauss(lo, hi, 1.0 / 16.0, 16, t, w);
  const std::size_t P = t.size();

  std::vector<double> u(P);
  const double s2p = std::sqrt(2.0 * kPi), norm = std::pow(2.0 * kPi, 0.25);
  for (std::size_t p = 0; p < P; ++p) u[p] = s2p * t[p];
  std::vector<double> hb(P * static_cast<std::size_t>(K));
  kernels::hermite_block(u, K, hb);
  Eigen::MatrixXd H(P, K);
  for (int k = 0; k < K; ++k)
    for (std::size_t p = 0; p < P; ++p) H(p, k) = norm * hb[k * P + p] * w[p];

  const int mcount = 2 * m_max + 1;
  for (int n = -n_max; n <= n_max; ++n)
    for (int m = -m_max; m <= m_max; ++m) out.rows.push_back({n, m});
  out.G.resize(static_cast<Eigen::Index>(out.rows.size()), K);

  std::vector<cplx> win;
  for (int n = -n_max; n <= n_max; ++n) {
    const double shift = n * G.alpha;
    const auto p0 = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), shift + wlo) - t.begin());
    const auto p1 = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), shift + whi) - t.begin());
    const Eigen::Index len = static_cast<Eigen::Index>(p1 - p0);
    Eigen::MatrixXcd blk(mcount, K);
    if (len <= 0) {
      blk.setZero();
    } else {
      win.resize(static_cast<std::size_t>(len));
      const TestFunction wn = G.window.affine(1.0, -shift);
      wn.eval_batch(std::span<const double>(t.data() + p0, static_cast<std::size_t>(len)), win);
      Eigen::MatrixXd Er(mcount, len), Ei(mcount, len);
      for (int mi = 0; mi < mcount; ++mi) {
        const double m = mi - m_max;
        for (Eigen::Index q = 0; q < len; ++q) {
          const double cyc = G.beta * m * t[p0 + q];
          const cplx e = std::polar(1.0, -2.0 * kPi * (cyc - std::round(cyc))) * std::conj(win[q]);
          Er(mi, q) = e.real();
          Ei(mi, q) = e.imag();
        }
      }
      const auto Hs = H.middleRows(static_cast<Eigen::Index>(p0), len);
      blk.real() = Er * Hs;
      blk.imag() = Ei * Hs;
    }
    out.G.middleRows(static_cast<Eigen::Index>(n + n_max) * mcount, mcount) = blk;
  }
  return out;
}

Extremes gabor_extremes(const GaborSystem& G, int N, int* K_out, int* elements) {
  const int K = reference_dim(G, N, N);
  const auto comp = gabor_compress(G, N, N, K);
  const Eigen::MatrixXcd S = comp.G.adjoint() * comp.G;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S, Eigen::EigenvaluesOnly);
  *K_out = K;
  *elements = static_cast<int>(comp.rows.size());
  return extremes(es.eigenvalues());
}

// ---------------------------------------------------------------- wavelets

// Inner products among Meyer wavelets depend only on the scale gap and a
// combined translation index; both tables come from frequency integrals.
double same_scale(int d) {
  // int |psi^(eta)|^2 e^{2 pi i d eta} d eta
  const auto& gl = numerics::gauss_legendre(24);
  const int panels = 8 + 2 * std::abs(d);
  double s = 0.0;
  for (auto [a, b] : {std::pair{1.0 / 3.0, 2.0 / 3.0}, std::pair{2.0 / 3.0, 4.0 / 3.0}}) {
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
      for (int i = 0; i < 24; ++i) {
        const double x = a + h * (p + 0.5 + 0.5 * gl.nodes[i]);
        s += 0.5 * h * gl.weights[i] * std::pow(specfun::meyer_hat_abs(x), 2) * 2.0 * std::cos(2.0 * kPi * d * x);
      }
  }
  return s;
}

double adjacent_scale(int k) {
  // <psi_{m,n}, psi_{m+1,n'}> with k = 2n - n':
  // 2^{-1/2} int psi^(eta) conj(psi^(eta/2)) e^{-i pi k eta} d eta
  const auto& gl = numerics::gauss_legendre(24);
  const int panels = 8 + 2 * std::abs(k);
  cplx s = 0.0;
  for (auto [a, b] : {std::pair{-4.0 / 3.0, -2.0 / 3.0}, std::pair{2.0 / 3.0, 4.0 / 3.0}}) {
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
      for (int i = 0; i < 24; ++i) {
        const double x = a + h * (p + 0.5 + 0.5 * gl.nodes[i]);
        s += 0.5 * h * gl.weights[i] * specfun::meyer_hat(x) * std::conj(specfun::meyer_hat(0.5 * x)) *
             std::polar(1.0, -kPi * k * x);
      }
  }
  return std::sqrt(0.5) * s.real();
}

Extremes wavelet_extremes(const WaveletSystem& W, int N, int* elements) {
  const int m0 = std::max(W.m_min, -N), m1 = std::min(W.m_max, N);
  require(m0 <= m1, "wavelet section has no scales");
  std::vector<std::array<int, 2>> idx;
  for (int m = m0; m <= m1; ++m)
    for (int n = -N; n <= N; ++n) idx.push_back({m, n});
  const int D = static_cast<int>(idx.size());
  std::vector<double> g0(4 * N + 1), g1(6 * N + 1);
  for (int d = -2 * N; d <= 2 * N; ++d) g0[d + 2 * N] = same_scale(d);
  for (int k = -3 * N; k <= 3 * N; ++k) g1[k + 3 * N] = adjacent_scale(k);
  Eigen::MatrixXd Gm(D, D);
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c) {
      const auto [m, n] = idx[r];
      const auto [mm, nn] = idx[c];
      double v = 0.0;
      if (m == mm) {
        v = g0[n - nn + 2 * N];
      } else if (mm == m + 1) {
        v = g1[2 * n - nn + 3 * N];
      } else if (m == mm + 1) {
        v = g1[2 * nn - n + 3 * N];
      }
      Gm(r, c) = v;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Gm, Eigen::EigenvaluesOnly);
  *elements = D;
  return extremes(es.eigenvalues());
}

// ---------------------------------------------------------------- Hermite

Extremes hermite_extremes(const HermiteFrame& F, int N, int* elements) {
  const int n = std::min<int>(N, static_cast<int>(F.M.cols()));
  const Eigen::MatrixXd sub = F.M.leftCols(n);
  const Eigen::MatrixXd S = sub.transpose() * sub;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  *elements = static_cast<int>(F.M.rows());
  return extremes(es.eigenvalues());
}

Extremes section(const FrameSystem& F, int N, int* ref, int* elements) {
  return std::visit(
      [&](const auto& sys) -> Extremes {
        using T = std::decay_t<decltype(sys)>;
        if constexpr (std::is_same_v<T, GaborSystem>) {
          return gabor_extremes(sys, N, ref, elements);
        } else if constexpr (std::is_same_v<T, WaveletSystem>) {
          Extremes e = wavelet_extremes(sys, N, elements);
          *ref = *elements;
          return e;
        } else {
          *ref = std::min<int>(N, static_cast<int>(sys.M.cols()));
          return hermite_extremes(sys, N, elements);
        }
      },
      F);
}

// Pseudo-inverse application through a symmetric eigendecomposition.
template <class Mat>
Eigen::VectorXcd solve_frame_operator(const Mat& S, const Eigen::VectorXcd& y, std::string_view what) {
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  const Eigen::VectorXd ev = es.eigenvalues();
  check_nonsingular(extremes(ev), what);
  const Eigen::VectorXcd z = es.eigenvectors().adjoint() * y;
  Eigen::VectorXcd scaled(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) scaled[i] = z[i] / ev[i];
  return es.eigenvectors() * scaled;
}

Reconstruction hermite_series_function(std::vector<cplx> coeffs, double dilation, double amp, std::string label) {
  std::vector<double> re(coeffs.size()), im(coeffs.size());
  bool has_im = false;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    re[j] = coeffs[j].real() * amp;
    im[j] = coeffs[j].imag() * amp;
    has_im = has_im || im[j] != 0.0;
  }
  const double radius = (std::sqrt(2.0 * coeffs.size() + 1.0) + 9.5) / dilation;
  auto eval = [re, im, has_im, dilation](std::span<const double> t, std::span<cplx> out) {
    std::vector<double> u(t.size()), a(t.size()), b(t.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) u[i] = dilation * t[i];
    kernels::hermite_series(re, u, a);
    if (has_im) kernels::hermite_series(im, u, b);
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = cplx(a[i], b[i]);
  };
  Reconstruction r(eval, {-radius, radius}, std::move(label));
  r.hermite_coefficients = std::move(coeffs);
  return r;
}

}  // namespace

FrameBoundsReport frame_bounds(const FrameSystem& F, int N, bool with_half) {
  require(N >= 2, "frame_bounds: truncation must be at least 2");
  FrameBoundsReport rep;
  rep.truncation = N;
  const auto e = section(F, N, &rep.reference_dim, &rep.elements);
  check_nonsingular(e, std::string(system_name(F)) + " section");
  rep.A = e.lo;
  rep.B = e.hi;
  if (with_half && N / 2 >= 2) {
    int r, el;
    const auto h = section(F, N / 2, &r, &el);
    rep.A_half = h.lo;
    rep.B_half = h.hi;
    rep.change_vs_half = std::max(std::abs(rep.A - h.lo) / rep.A, std::abs(rep.B - h.hi) / rep.B);
  }
  return rep;
}

Reconstruction::Reconstruction(Eval eval, std::pair<double, double> support, std::string label)
    : eval_(std::move(eval)), support_(support), label_(std::move(label)) {}

cplx Reconstruction::operator()(double t) const {
  cplx out;
  eval_(std::span<const double>(&t, 1), std::span<cplx>(&out, 1));
  return out;
}

void Reconstruction::eval_batch(std::span<const double> t, std::span<cplx> out) const { eval_(t, out); }

Distribution Reconstruction::as_distribution() const {
  RegularFunction rf;
  rf.eval = eval_;
  rf.growth = {GrowthKind::polynomial, 0.0};
  rf.label = label_;
  rf.real = false;
  return Distribution::regular(std::move(rf));
}

Reconstruction dual_frame_apply(const FrameSystem& F, const CoeffGrid& coeffs) {
  return std::visit(
      [&](const auto& sys) -> Reconstruction {
        using T = std::decay_t<decltype(sys)>;
        if constexpr (std::is_same_v<T, HermiteFrame>) {
          require(coeffs.size() == static_cast<std::size_t>(sys.M.rows()), "coefficient count does not match frame");
          Eigen::VectorXcd c(coeffs.size());
          for (std::size_t i = 0; i < coeffs.size(); ++i) c[static_cast<Eigen::Index>(i)] = coeffs.values[i];
          const Eigen::MatrixXd S = sys.M.transpose() * sys.M;
          const Eigen::VectorXcd y = sys.M.transpose().template cast<cplx>() * c;
          const Eigen::VectorXcd x = solve_frame_operator(S, y, "hermite frame");
          return hermite_series_function(std::vector<cplx>(x.data(), x.data() + x.size()), 1.0, 1.0,
                                         "hermite_synthesis");
        } else if constexpr (std::is_same_v<T, GaborSystem>) {
          int n_max = 0, m_max = 0;
          for (const auto& ix : coeffs.indices) {
            n_max = std::max(n_max, std::abs(ix[0]));
            m_max = std::max(m_max, std::abs(ix[1]));
          }
          const int K = reference_dim(sys, n_max, m_max);
          const auto comp = gabor_compress(sys, n_max, m_max, K);
          Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(comp.rows.size()));
          for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const auto [n, m] = coeffs.indices[i];
            c[(n + n_max) * (2 * m_max + 1) + (m + m_max)] = coeffs.values[i];
          }
          const Eigen::MatrixXcd S = comp.G.adjoint() * comp.G;
          const Eigen::VectorXcd y = comp.G.adjoint() * c;
          const Eigen::VectorXcd x = solve_frame_operator(S, y, "gabor section");
          return hermite_series_function(std::vector<cplx>(x.data(), x.data() + x.size()), std::sqrt(2.0 * kPi),
                                         std::pow(2.0 * kPi, 0.25), "gabor_synthesis");
        } else {
          struct Term {
            TestFunction psi;
            cplx c;
          };
          std::vector<Term> terms;
          double lo = 0.0, hi = 0.0;
          auto add = [&](const TestFunction& psi, cplx c) {
            if (c == cplx(0.0)) return;
            terms.push_back({psi, c});
            const auto [a, b] = psi.support();
            lo = std::min(lo, a);
            hi = std::max(hi, b);
          };
          for (std::size_t i = 0; i < coeffs.size(); ++i)
            add(wavelet_element(coeffs.indices[i][0], coeffs.indices[i][1]), coeffs.values[i]);
          for (std::size_t i = 0; i < coeffs.closure_n.size(); ++i)
            add(scaling_element(coeffs.closure_level, coeffs.closure_n[i]), coeffs.closure_values[i]);
          auto eval = [terms = std::move(terms)](std::span<const double> t, std::span<cplx> out) {
            std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(t.size()), cplx(0.0));
            std::vector<cplx> tmp(t.size());
            for (const auto& term : terms) {
              term.psi.eval_batch(t, tmp);
              for (std::size_t i = 0; i < t.size(); ++i) out[i] += term.c * tmp[i];
            }
          };
          return Reconstruction(eval, {lo, hi}, "wavelet_synthesis");
        }
      },
      F);
}

CrossGramian cross_gramian(const HermiteFrame& F) {
  CrossGramian X;
  X.G = F.M.cast<cplx>();
  X.nominal.resize(static_cast<std::size_t>(F.M.rows()));
  for (std::size_t r = 0; r < X.nominal.size(); ++r) X.nominal[r] = static_cast<double>(r);
  return X;
}

CrossGramian cross_gramian(const GaborSystem& G, int cols) {
  require(cols >= 1 && cols <= kMaxReference, "cross_gramian: reference size out of range");
  const auto comp = gabor_compress(G, G.n_max, G.m_max, cols);
  CrossGramian X;
  X.G = comp.G.conjugate();
  for (const auto& [n, m] : comp.rows) {
    const double x = n * G.alpha, y = m * G.beta;
    X.nominal.push_back(kPi * (x * x + y * y) - 0.5);
  }
  return X;
}

std::vector<double> default_gamma_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 16; ++i) g.push_back(0.5 * i);
  return g;
}

LocalizationFit localization_decay(const CrossGramian& X, const std::vector<double>& gamma_grid, double ceiling,
                                   double zero_tol) {
  require(!gamma_grid.empty(), "localization_decay: empty gamma grid");
  LocalizationFit fit;
  fit.rows = static_cast<int>(X.G.rows());
  fit.cols = static_cast<int>(X.G.cols());
  fit.gammas = gamma_grid;
  fit.C.assign(gamma_grid.size(), 0.0);
  bool off_diagonal = false;
  double diag_max = 0.0;
  for (Eigen::Index r = 0; r < X.G.rows(); ++r)
    for (Eigen::Index j = 0; j < X.G.cols(); ++j) {
      const double v = std::abs(X.G(r, j));
      if (v == 0.0) continue;
      const double d = std::abs(X.nominal[static_cast<std::size_t>(r)] - static_cast<double>(j));
      if (d >= 0.5 && v > zero_tol) off_diagonal = true;
      if (d < 0.5) diag_max = std::max(diag_max, v);
      for (std::size_t g = 0; g < gamma_grid.size(); ++g)
        fit.C[g] = std::max(fit.C[g], v * std::pow(1.0 + d, gamma_grid[g]));
    }
  if (!off_diagonal) {
    fit.gamma_fit = std::numeric_limits<double>::infinity();
    fit.C_fit = diag_max;
    return fit;
  }
  fit.gamma_fit = -1.0;
  for (std::size_t g = 0; g < gamma_grid.size(); ++g)
    if (fit.C[g] <= ceiling && gamma_grid[g] >= fit.gamma_fit) {
      fit.gamma_fit = gamma_grid[g];
      fit.C_fit = fit.C[g];
    }
  return fit;
}

}  // namespace frameasym::frames
