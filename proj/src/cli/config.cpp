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
#include <fstream>
#include <set>
#include <sstream>

#include "frameasym/cli/cli.hpp"
#include "frameasym/error.hpp"

namespace frameasym::cli {

namespace {

using asymptotics::SlowlyVarying;

[[noreturn]] void bad(const std::string& path, const std::string& what) { fail(ErrorCode::config, path + ": " + what); }

// Object reader that records consumed keys and rejects the rest.
class Reader {
 public:
  Reader(json j, std::string path) : j_(std::move(j)), path_(std::move(path)) {
    if (!j_.is_object()) bad(path_, "expected an object");
  }

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const { return path_ + "." + key; }
  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) bad(at(key), "missing required field");
    return j_.at(key);
  }

  // Optional nested object; missing sections read as {}.
  json section(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key) ? j_.at(key) : json::object();
  }

  double num(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) bad(at(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) bad(at(key), "expected a finite number");
    return d;
  }
  double num(const std::string& key, double def) { return has(key) ? num(key) : (seen_.insert(key), def); }

  long integer(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer()) bad(at(key), "expected an integer");
    return v.get<long>();
  }
  long integer(const std::string& key, long def) { return has(key) ? integer(key) : (seen_.insert(key), def); }

  std::uint64_t u64(const std::string& key, std::uint64_t def) {
    if (!has(key)) return seen_.insert(key), def;
    const json& v = raw(key);
    if (!v.is_number_unsigned()) bad(at(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(const std::string& key, bool def) {
    if (!has(key)) return seen_.insert(key), def;
    const json& v = raw(key);
    if (!v.is_boolean()) bad(at(key), "expected true or false");
    return v.get<bool>();
  }

  std::string str(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) bad(at(key), "expected a string");
    return v.get<std::string>();
  }
  std::string str(const std::string& key, const std::string& def) { return has(key) ? str(key) : (seen_.insert(key), def); }

  std::vector<double> nums(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) bad(at(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) bad(at(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }
  std::vector<double> nums(const std::string& key, std::vector<double> def) {
    return has(key) ? nums(key) : (seen_.insert(key), std::move(def));
  }

  void done() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) bad(path_, "unknown field \"" + it.key() + "\"");
  }

 private:
  json j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <class F>
auto one_of(const std::string& path, const std::string& value, std::initializer_list<const char*> allowed, F&& f) {
  for (const char* a : allowed)
    if (value == a) return f();
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  bad(path, "unknown type \"" + value + "\" (expected one of " + list + ")");
}

Side parse_side(Reader& r, json& echo) {
  const std::string s = r.str("side", "plus");
  echo["side"] = s;
  if (s == "plus") return Side::plus;
  if (s == "minus") return Side::minus;
  if (s == "abs") return Side::abs;
  bad(r.at("side"), "expected plus, minus or abs");
}

struct ParsedDistribution {
  Distribution d;
  std::function<double(double)> eval;
  json echo;
};

ParsedDistribution parse_regular(Reader& r) {
  ParsedDistribution p;
  p.echo["type"] = "regular";
  const std::string kind = r.str("kind");
  p.echo["kind"] = kind;
  RegularFunction rf;
  rf.label = kind;
  std::function<double(double)> g;
  if (kind == "exp_sum") {
    const json& terms = r.raw("terms");
    if (!terms.is_array() || terms.empty()) bad(r.at("terms"), "expected a non-empty array");
    std::vector<std::pair<double, double>> ar;
    json te = json::array();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Reader t(terms[i], r.at("terms") + "[" + std::to_string(i) + "]");
      const double amp = t.num("amp", 1.0), rate = t.num("rate");
      t.done();
      ar.emplace_back(amp, rate);
      te.push_back({{"amp", amp}, {"rate", rate}});
    }
    p.echo["terms"] = te;
    double top = 0.0;
    for (auto [a, b] : ar) top = std::max(top, std::abs(b));
    rf.growth = top > 0 ? Growth{GrowthKind::exponential, top} : Growth{GrowthKind::polynomial, 0};
    g = [ar](double x) {
      double s = 0;
      for (auto [a, b] : ar) s += a * std::exp(b * x);
      return s;
    };
  } else if (kind == "gaussian") {
    const double c = r.num("center", 0.0), s = r.num("sigma", 1.0), a = r.num("amp", 1.0);
    if (!(s > 0)) bad(r.at("sigma"), "expected a positive width");
    p.echo["center"] = c;
    p.echo["sigma"] = s;
    p.echo["amp"] = a;
    rf.growth = {GrowthKind::polynomial, 0};
    g = [c, s, a](double x) { return a * std::exp(-0.5 * (x - c) * (x - c) / (s * s)); };
  } else if (kind == "window") {
    rf.growth = {GrowthKind::polynomial, 0};
    g = [](double x) { return std::pow(2.0, 0.25) * std::exp(-M_PI * x * x); };
  } else if (kind == "power_log") {
    const double alpha = r.num("alpha"), beta = r.num("log_power", 0.0);
    if (!(alpha > -1)) bad(r.at("alpha"), "expected alpha > -1");
    p.echo["alpha"] = alpha;
    p.echo["log_power"] = beta;
    const Side side = parse_side(r, p.echo);
    rf.growth = {GrowthKind::polynomial, std::max(0.0, alpha) + (beta > 0 ? 1.0 : 0.0)};
    rf.breakpoints = {-1.0, 0.0, 1.0};
    g = [alpha, beta, side](double x) {
      if ((side == Side::plus && x <= 0) || (side == Side::minus && x >= 0) || x == 0) return 0.0;
      const double a = std::abs(x);
      return std::pow(a, alpha) * (beta == 0 ? 1.0 : std::pow(std::abs(std::log(a)), beta));
    };
  } else if (kind == "hermite") {
    const long n = r.integer("n");
    if (n < 0 || n > 4096) bad(r.at("n"), "expected 0 <= n <= 4096");
    p.echo["n"] = n;
    rf.growth = {GrowthKind::polynomial, 0};
    const auto h = TestFunction::hermite(static_cast<int>(n));
    g = [h](double x) { return h(x).real(); };
  } else {
    bad(r.at("kind"), "unknown kind \"" + kind + "\" (expected exp_sum, gaussian, window, power_log or hermite)");
  }
  rf.eval = [g](std::span<const double> t, std::span<cplx> out) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = g(t[i]);
  };
  p.d = Distribution::regular(rf);
  p.eval = g;
  return p;
}

ParsedDistribution parse_distribution(const json& j, const std::string& path) {
  Reader r(j, path);
  const std::string type = r.str("type");
  ParsedDistribution p = one_of(r.at("type"), type, {"zero", "delta", "homogeneous", "polynomial", "combination", "regular"}, [&] {
    ParsedDistribution q;
    q.echo["type"] = type;
    if (type == "zero") {
      q.eval = [](double) { return 0.0; };
    } else if (type == "delta") {
      const long k = r.integer("order", 0);
      const double a = r.num("point", 0.0);
      if (k < 0 || k > 64) bad(r.at("order"), "expected 0 <= order <= 64");
      q.d = Distribution::delta(static_cast<int>(k), a);
      q.echo["order"] = k;
      q.echo["point"] = a;
    } else if (type == "homogeneous") {
      const double alpha = r.num("alpha");
      if (!(alpha > -1)) bad(r.at("alpha"), "expected alpha > -1");
      q.echo["alpha"] = alpha;
      const Side s = parse_side(r, q.echo);
      q.d = Distribution::homogeneous(alpha, s);
    } else if (type == "polynomial") {
      const auto c = r.nums("coeffs");
      q.d = Distribution::polynomial(c);
      q.echo["coeffs"] = c;
      q.eval = [c](double x) {
        double s = 0;
        for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
        return s;
      };
    } else if (type == "combination") {
      const json& terms = r.raw("terms");
      if (!terms.is_array()) bad(r.at("terms"), "expected an array");
      std::vector<std::pair<cplx, Distribution>> parts;
      json te = json::array();
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string tp = r.at("terms") + "[" + std::to_string(i) + "]";
        Reader t(terms[i], tp);
        const double re = t.num("weight", 1.0), im = t.num("weight_imag", 0.0);
        const auto sub = parse_distribution(t.raw("distribution"), t.at("distribution"));
        t.done();
        parts.emplace_back(cplx(re, im), sub.d);
        te.push_back({{"weight", re}, {"weight_imag", im}, {"distribution", sub.echo}});
      }
      q.d = Distribution::combination(parts);
      q.echo["terms"] = te;
    } else {
      return parse_regular(r);
    }
    return q;
  });
  r.done();
  return p;
}

TestFunction parse_window(const json& j, const std::string& path, json& echo) {
  Reader r(j, path);
  const std::string type = r.str("type", "gaussian");
  echo["type"] = type;
  TestFunction w = one_of(r.at("type"), type, {"gaussian", "hermite"}, [&] {
    if (type == "gaussian") return TestFunction::gaussian_window();
    const long n = r.integer("n");
    if (n < 0 || n > 256) bad(r.at("n"), "expected 0 <= n <= 256");
    echo["n"] = n;
    return TestFunction::hermite(static_cast<int>(n));
  });
  r.done();
  return w;
}

frames::FrameSystem parse_frame(const json& j, const std::string& path, std::optional<std::uint64_t> seed, json& echo) {
  Reader r(j, path);
  const std::string type = r.str("type");
  echo["type"] = type;
  frames::FrameSystem F = one_of(r.at("type"), type, {"gabor", "wavelet", "hermite"}, [&]() -> frames::FrameSystem {
    if (type == "gabor") {
      frames::GaborSystem G;
      json we;
      G.window = parse_window(r.section("window"), r.at("window"), we);
      G.alpha = r.num("alpha", 0.5);
      G.beta = r.num("beta", 0.5);
      G.n_max = static_cast<int>(r.integer("n_max", 16));
      G.m_max = static_cast<int>(r.integer("m_max", 4));
      if (!(G.alpha > 0) || !(G.beta > 0)) bad(path, "lattice constants must be positive");
      if (G.n_max < 0 || G.m_max < 0) bad(path, "box sizes must be non-negative");
      echo["window"] = we;
      echo["alpha"] = G.alpha;
      echo["beta"] = G.beta;
      echo["n_max"] = G.n_max;
      echo["m_max"] = G.m_max;
      return G;
    }
    if (type == "wavelet") {
      frames::WaveletSystem W;
      W.m_min = static_cast<int>(r.integer("m_min", -4));
      W.m_max = static_cast<int>(r.integer("m_max", 4));
      W.n_max = static_cast<int>(r.integer("n_max", 8));
      W.scaling_closure = r.boolean("scaling_closure", false);
      if (W.m_max < W.m_min || W.n_max < 0) bad(path, "empty wavelet box");
      if (W.m_min < -30 || W.m_max > 30) bad(path, "scale range limited to |m| <= 30");
      echo["m_min"] = W.m_min;
      echo["m_max"] = W.m_max;
      echo["n_max"] = W.n_max;
      echo["scaling_closure"] = W.scaling_closure;
      return W;
    }
    frames::HermiteFrame H;
    if (r.has("rows")) {
      const json& rows = r.raw("rows");
      if (!rows.is_array() || rows.empty()) bad(r.at("rows"), "expected a non-empty array of rows");
      const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
      if (cols == 0) bad(r.at("rows"), "rows must be non-empty arrays");
      H.M.resize(static_cast<long>(rows.size()), static_cast<long>(cols));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rp = r.at("rows") + "[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != cols) bad(rp, "expected " + std::to_string(cols) + " numbers");
        for (std::size_t c = 0; c < cols; ++c) {
          if (!rows[i][c].is_number()) bad(rp + "[" + std::to_string(c) + "]", "expected a number");
          H.M(static_cast<long>(i), static_cast<long>(c)) = rows[i][c].get<double>();
        }
      }
      H.bandwidth = static_cast<int>(r.integer("bandwidth", 0));
      echo["rows"] = rows;
      echo["bandwidth"] = H.bandwidth;
      return H;
    }
    const std::string matrix = r.str("matrix", "identity");
    const long N = r.integer("N", 32);
    if (N < 1 || N > 4096) bad(r.at("N"), "expected 1 <= N <= 4096");
    echo["matrix"] = matrix;
    echo["N"] = N;
    return one_of(r.at("matrix"), matrix, {"identity", "banded", "tight"}, [&] {
      if (matrix == "identity") return frames::HermiteFrame::identity(static_cast<int>(N));
      if (matrix == "tight") return frames::HermiteFrame::duplicated_tight(static_cast<int>(N));
      const long bw = r.integer("bandwidth", 2);
      if (bw < 1 || bw >= N) bad(r.at("bandwidth"), "expected 1 <= bandwidth < N");
      std::uint64_t s = r.u64("seed", 1);
      if (seed) s = *seed;
      echo["bandwidth"] = bw;
      echo["seed"] = s;
      return frames::HermiteFrame::banded_random(static_cast<int>(N), static_cast<int>(bw), s);
    });
  });
  r.done();
  return F;
}

SlowlyVarying parse_L_object(const json& j, const std::string& path, Regime regime, json& echo) {
  Reader r(j, path);
  const std::string type = r.str("type");
  echo["type"] = type;
  SlowlyVarying L = one_of(r.at("type"), type, {"constant", "logpower", "product"}, [&] {
    if (type == "constant") {
      const double c = r.num("c", 1.0);
      if (!(c > 0)) bad(r.at("c"), "expected a positive constant");
      echo["c"] = c;
      return SlowlyVarying::constant(c, regime);
    }
    if (type == "logpower") {
      const double b = r.num("beta");
      echo["beta"] = b;
      return SlowlyVarying::log_power(b, regime);
    }
    const json& fs = r.raw("factors");
    if (!fs.is_array() || fs.empty()) bad(r.at("factors"), "expected a non-empty array");
    json fe = json::array();
    std::optional<SlowlyVarying> acc;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      json e;
      const auto Li = parse_L_object(fs[i], r.at("factors") + "[" + std::to_string(i) + "]", regime, e);
      acc = acc ? SlowlyVarying::product(*acc, Li) : Li;
      fe.push_back(e);
    }
    echo["factors"] = fe;
    return *acc;
  });
  if (r.has("bound")) {
    L.bound = r.num("bound");
    if (!(L.bound > 0)) bad(r.at("bound"), "expected a positive bound");
  }
  echo["bound"] = L.bound;
  r.done();
  std::string why;
  if (!L.verify(&why)) bad(path, "not slowly varying: " + why);
  return L;
}

}  // namespace

std::vector<double> ExperimentConfig::scales() const {
  if (regime == Regime::shift) return x_ladder;
  asymptotics::Ladder l = ladder;
  l.regime = regime;
  return l.scales();
}

ExperimentConfig parse_config(const std::string& text, std::optional<std::uint64_t> seed_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::config, std::string("malformed JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  Reader r(doc, "$");
  json& echo = cfg.echo;
  const std::string schema = r.str("schema", "frameasym-config/1");
  if (schema != "frameasym-config/1") bad(r.at("schema"), "unsupported schema \"" + schema + "\"");
  echo["schema"] = schema;

  auto dist = parse_distribution(r.raw("distribution"), r.at("distribution"));
  cfg.f = dist.d;
  cfg.f_eval = dist.eval;
  echo["distribution"] = dist.echo;

  json fe;
  cfg.frame = parse_frame(r.raw("frame"), r.at("frame"), seed_override, fe);
  echo["frame"] = fe;

  // Regime.
  {
    const bool gabor = std::holds_alternative<frames::GaborSystem>(cfg.frame);
    json re;
    Reader rr(r.section("regime"), r.at("regime"));
    const std::string t = rr.str("type", gabor ? "shift" : "origin");
    re["type"] = t;
    cfg.regime = one_of(rr.at("type"), t, {"origin", "infinity", "shift"}, [&] {
      return t == "origin" ? Regime::origin : t == "infinity" ? Regime::infinity : Regime::shift;
    });
    if (cfg.regime == Regime::origin) {
      cfg.x0 = rr.num("x0", 0.0);
      re["x0"] = cfg.x0;
    }
    rr.done();
    echo["regime"] = re;
  }

  // Ladder.
  {
    json le;
    Reader lr(r.section("ladder"), r.at("ladder"));
    if (lr.has("scales")) {
      cfg.ladder.explicit_scales = lr.nums("scales");
      for (double s : cfg.ladder.explicit_scales)
        if (!(s > 0)) bad(lr.at("scales"), "scales must be positive");
      le["scales"] = cfg.ladder.explicit_scales;
    } else {
      cfg.ladder.base = lr.num("base", 2.0);
      cfg.ladder.j_min = static_cast<int>(lr.integer("j_min", 2));
      cfg.ladder.j_max = static_cast<int>(lr.integer("j_max", 12));
      if (!(cfg.ladder.base > 1)) bad(lr.at("base"), "expected base > 1");
      if (cfg.ladder.j_max < cfg.ladder.j_min) bad(lr.path(), "expected j_min <= j_max");
      le["base"] = cfg.ladder.base;
      le["j_min"] = cfg.ladder.j_min;
      le["j_max"] = cfg.ladder.j_max;
    }
    cfg.x_ladder = lr.nums("x", {2, 4, 6, 8, 10, 12, 14, 16, 18, 20});
    for (std::size_t i = 1; i < cfg.x_ladder.size(); ++i)
      if (!(cfg.x_ladder[i] > cfg.x_ladder[i - 1])) bad(lr.at("x"), "positions must increase");
    le["x"] = cfg.x_ladder;
    lr.done();
    echo["ladder"] = le;
  }

  // Slowly varying model.
  {
    const Regime lreg = cfg.regime == Regime::origin ? Regime::origin : Regime::infinity;
    if (!r.has("L")) {
      r.section("L");
      cfg.L = SlowlyVarying::constant(1.0, lreg);
      echo["L"] = {{"type", "constant"}, {"c", 1.0}, {"bound", cfg.L->bound}};
    } else if (r.raw("L").is_string()) {
      const std::string s = r.str("L");
      if (s == "auto") {
        echo["L"] = "auto";
      } else if (s == "constant") {
        cfg.L = SlowlyVarying::constant(1.0, lreg);
        echo["L"] = {{"type", "constant"}, {"c", 1.0}, {"bound", cfg.L->bound}};
      } else {
        bad(r.at("L"), "expected \"constant\", \"auto\" or an object");
      }
    } else {
      json e;
      cfg.L = parse_L_object(r.raw("L"), r.at("L"), lreg, e);
      echo["L"] = e;
    }
  }

  // Tolerances.
  {
    Reader t(r.section("tolerances"), r.at("tolerances"));
    auto& p = cfg.pipeline;
    p.limit.tol = t.num("limit_tol", p.limit.tol);
    p.limit.min_rungs = static_cast<int>(t.integer("min_rungs", p.limit.min_rungs));
    p.bound.growth_tol = t.num("bound_growth_tol", p.bound.growth_tol);
    p.abelian_tol = t.num("abelian_tol", p.abelian_tol);
    p.degree.residual_tol = t.num("residual_tol", p.degree.residual_tol);
    p.degree.dispersion_tol = t.num("dispersion_tol", p.degree.dispersion_tol);
    p.s_asym.slope_tol = t.num("slope_tol", p.s_asym.slope_tol);
    p.s_asym.c_tol = t.num("c_tol", p.s_asym.c_tol);
    p.pair.quad.abs_tol = t.num("quad_abs_tol", p.pair.quad.abs_tol);
    p.pair.quad.rel_tol = t.num("quad_rel_tol", p.pair.quad.rel_tol);
    cfg.polynomial.residual_tol = t.num("remainder_tol", cfg.polynomial.residual_tol);
    t.done();
    p.s_asym.limit = p.limit;
    p.s_asym.bound = p.bound;
    p.s_asym.pair = p.pair;
    echo["tolerances"] = {{"limit_tol", p.limit.tol},          {"min_rungs", p.limit.min_rungs},
                          {"bound_growth_tol", p.bound.growth_tol}, {"abelian_tol", p.abelian_tol},
                          {"residual_tol", p.degree.residual_tol},  {"dispersion_tol", p.degree.dispersion_tol},
                          {"slope_tol", p.s_asym.slope_tol},        {"c_tol", p.s_asym.c_tol},
                          {"quad_abs_tol", p.pair.quad.abs_tol},    {"quad_rel_tol", p.pair.quad.rel_tol},
                          {"remainder_tol", cfg.polynomial.residual_tol}};
  }

  // Analysis route.
  {
    Reader a(r.section("analysis"), r.at("analysis"));
    const std::string mode = a.str("mode", "tauberian");
    json ae;
    ae["mode"] = mode;
    cfg.mode = one_of(a.at("mode"), mode, {"tauberian", "polynomial", "monotone"}, [&] {
      return mode == "tauberian" ? AnalysisMode::tauberian
                                 : mode == "polynomial" ? AnalysisMode::polynomial : AnalysisMode::monotone;
    });
    if (cfg.mode == AnalysisMode::polynomial) {
      cfg.alpha = a.num("alpha");
      ae["alpha"] = cfg.alpha;
      if (!std::holds_alternative<frames::WaveletSystem>(cfg.frame) || cfg.regime != Regime::origin)
        bad(a.path(), "polynomial extraction needs a wavelet frame in the origin regime");
    } else if (cfg.mode == AnalysisMode::monotone) {
      cfg.b = a.num("b");
      ae["b"] = cfg.b;
      if (!std::holds_alternative<frames::GaborSystem>(cfg.frame)) bad(a.path(), "the monotone route uses the Gabor window");
      if (!cfg.f_eval) bad(a.path(), "the monotone route needs a pointwise distribution (regular, polynomial or zero)");
    }
    a.done();
    echo["analysis"] = ae;
  }

  // Frame check options.
  {
    Reader c(r.section("frame_check"), r.at("frame_check"));
    auto& o = cfg.frame_check;
    o.N = static_cast<int>(c.integer("N", o.N));
    o.with_half = c.boolean("with_half", o.with_half);
    o.gammas = c.nums("gammas", o.gammas);
    o.cols = static_cast<int>(c.integer("cols", o.cols));
    if (o.N < 1) bad(c.at("N"), "expected N >= 1");
    c.done();
    echo["frame_check"] = {{"N", o.N}, {"with_half", o.with_half}, {"gammas", o.gammas}, {"cols", o.cols}};
  }

  // Output names.
  {
    Reader o(r.section("output"), r.at("output"));
    auto& out = cfg.outputs;
    out.report = o.str("report", out.report);
    out.limits_csv = o.str("limits_csv", out.limits_csv);
    out.ratios_csv = o.str("ratios_csv", out.ratios_csv);
    out.coeffs_prefix = o.str("coeffs_prefix", out.coeffs_prefix);
    out.frame_check = o.str("frame_check", out.frame_check);
    o.done();
    echo["output"] = {{"report", out.report},
                      {"limits_csv", out.limits_csv},
                      {"ratios_csv", out.ratios_csv},
                      {"coeffs_prefix", out.coeffs_prefix},
                      {"frame_check", out.frame_check}};
  }
  r.done();

  cfg.pipeline.ladder = cfg.ladder;
  cfg.pipeline.L = cfg.L;
  cfg.pipeline.x0 = cfg.x0;
  cfg.pipeline.x_ladder = cfg.x_ladder;
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), seed_override);
}

}  // namespace frameasym::cli
