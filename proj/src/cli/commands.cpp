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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "frameasym/cli/cli.hpp"
#include "frameasym/error.hpp"
#include "frameasym/format.hpp"
#include "frameasym/parallel.hpp"

namespace frameasym::cli {

namespace fs = std::filesystem;
using namespace asymptotics;

namespace {

void write_file(const fs::path& path, const std::string& bytes) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot write " + path.string());
  out << bytes;
  if (!out) fail(ErrorCode::io, "short write to " + path.string());
}

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::config || c == ErrorCode::io || c == ErrorCode::invalid_argument ||
         c == ErrorCode::alpha_integer_or_negative;
}

SlowlyVarying model_L(const ExperimentConfig& cfg) {
  if (cfg.L) return *cfg.L;
  return SlowlyVarying::constant(1.0, cfg.regime == Regime::origin ? Regime::origin : Regime::infinity);
}

json base_report(const ExperimentConfig& cfg, const std::string& mode) {
  json j;
  j["schema"] = "frameasym-report/1";
  j["version"] = FRAMEASYM_VERSION;
  j["command"] = "analyze";
  j["config"] = cfg.echo;
  j["mode"] = mode;
  j["frame"] = std::string(frames::system_name(cfg.frame));
  j["regime"] = std::string(regime_name(cfg.regime));
  return j;
}

void set_outcome(json& j, Verdict v, const std::vector<std::string>& reasons) {
  j["verdict"] = std::string(verdict_name(v));
  j["certified"] = v != Verdict::not_certified;
  j["reasons"] = reasons;
}

json complex_pair(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

int analyze_tauberian(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
  const auto rep = run_tauberian_pipeline(cfg.f, cfg.frame, cfg.regime, cfg.pipeline);
  write_file(out / cfg.outputs.report, dump(report_json(cfg, rep)));
  write_file(out / cfg.outputs.limits_csv, rep.limits.to_csv());
  write_file(out / cfg.outputs.ratios_csv, rep.limits.ratios_csv());
  log << "verdict: " << verdict_name(rep.verdict) << "\n";
  for (const auto& r : rep.reasons) log << "  reason: " << r << "\n";
  return rep.certified() ? exit_certified : exit_not_certified;
}

int analyze_polynomial(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
  QuasiAsymptoticsModel model;
  model.alpha = cfg.alpha;
  model.L = model_L(cfg);
  model.center = cfg.x0;
  try {
    const auto ex = polynomial_extract(cfg.f, std::get<frames::WaveletSystem>(cfg.frame), model, cfg.pipeline,
                                       cfg.polynomial);
    json j = report_json(cfg, ex.report);
    j["mode"] = "polynomial";
    std::vector<std::string> reasons;
    if (!ex.decreasing) reasons.push_back("remainder does not decrease across the two smallest scales");
    set_outcome(j, reasons.empty() ? Verdict::certified : Verdict::not_certified, reasons);
    json coeffs = json::array();
    for (double c : ex.coeffs) coeffs.push_back(number(c));
    j["polynomial"] = {{"coeffs", coeffs},
                       {"c_plus", complex_pair(ex.c_plus)},
                       {"c_minus", complex_pair(ex.c_minus)},
                       {"g", ex.g.describe()},
                       {"residual", number(ex.residual)},
                       {"residual_prev", number(ex.residual_prev)},
                       {"decreasing", ex.decreasing}};
    write_file(out / cfg.outputs.report, dump(j));
    write_file(out / cfg.outputs.limits_csv, ex.report.limits.to_csv());
    write_file(out / cfg.outputs.ratios_csv, ex.report.limits.ratios_csv());
    log << "verdict: " << j["verdict"].get<std::string>() << "\n";
    return reasons.empty() ? exit_certified : exit_not_certified;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::residual_not_small) throw;
    json j = base_report(cfg, "polynomial");
    set_outcome(j, Verdict::not_certified, {e.what()});
    j["polynomial"] = nullptr;
    write_file(out / cfg.outputs.report, dump(j));
    log << "verdict: not certified\n  reason: " << e.what() << "\n";
    return exit_not_certified;
  }
}

int analyze_monotone(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
  const auto& G = std::get<frames::GaborSystem>(cfg.frame);
  json j = base_report(cfg, "monotone");
  const SlowlyVarying L = model_L(cfg);
  j["L"] = {{"description", L.describe()}, {"log_exponent", number(L.log_exponent())}};
  try {
    const auto r = monotone_tauberian(cfg.f_eval, G.window, cfg.b, L, cfg.x_ladder);
    std::vector<std::string> reasons;
    if (!(r.agreement < cfg.pipeline.abelian_tol))
      reasons.push_back("predicted limit and direct ratio differ by " + shortest(r.agreement));
    set_outcome(j, reasons.empty() ? Verdict::certified : Verdict::not_certified, reasons);
    json ladder = json::array();
    for (double v : r.a0_ladder) ladder.push_back(number(v));
    j["monotone"] = {{"b", number(cfg.b)},
                     {"limit", number(r.limit)},
                     {"a0", number(r.a0)},
                     {"window_integral", number(r.window_integral)},
                     {"direct_ratio", number(r.direct_ratio)},
                     {"agreement", number(r.agreement)},
                     {"a0_ladder", ladder},
                     {"x", cfg.x_ladder}};
    j["b"] = number(cfg.b);
    j["limit"] = number(r.limit);
  } catch (const Error& e) {
    if (is_input_error(e.code())) throw;
    set_outcome(j, Verdict::not_certified, {e.what()});
    j["monotone"] = nullptr;
  }
  write_file(out / cfg.outputs.report, dump(j));
  log << "verdict: " << j["verdict"].get<std::string>() << "\n";
  return j["certified"].get<bool>() ? exit_certified : exit_not_certified;
}

json bounds_json(const frames::FrameBoundsReport& b) {
  return {{"A", number(b.A)},
          {"B", number(b.B)},
          {"A_half", number(b.A_half)},
          {"B_half", number(b.B_half)},
          {"change_vs_half", number(b.change_vs_half)},
          {"truncation", b.truncation},
          {"reference_dim", b.reference_dim},
          {"elements", b.elements}};
}

json localization_json(const frames::LocalizationFit& fit) {
  json C = json::array(), g = json::array();
  for (std::size_t k = 0; k < fit.gammas.size(); ++k) {
    g.push_back(number(fit.gammas[k]));
    C.push_back(number(fit.C[k]));
  }
  return {{"gamma_fit", number(fit.gamma_fit)},
          {"C_fit", number(fit.C_fit)},
          {"gammas", g},
          {"C", C},
          {"rows", fit.rows},
          {"cols", fit.cols}};
}

}  // namespace

int cmd_analyze(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
  switch (cfg.mode) {
    case AnalysisMode::polynomial: return analyze_polynomial(cfg, out, log);
    case AnalysisMode::monotone: return analyze_monotone(cfg, out, log);
    case AnalysisMode::tauberian: break;
  }
  return analyze_tauberian(cfg, out, log);
}

int cmd_coeffs(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
  const auto scales = cfg.scales();
  const auto grids = ladder_grids(cfg.f, cfg.frame, scales, cfg.regime, cfg.x0, cfg.pipeline.pair);
  for (std::size_t k = 0; k < grids.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "_%03zu.csv", k);
    write_file(out / (cfg.outputs.coeffs_prefix + name), grids[k].to_csv());
  }
  log << "wrote " << grids.size() << " coefficient grids\n";
  return exit_certified;
}

int cmd_frame_check(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
  json j;
  j["schema"] = "frameasym-frame-check/1";
  j["version"] = FRAMEASYM_VERSION;
  j["command"] = "frame-check";
  j["config"] = cfg.echo;
  j["frame"] = std::string(frames::system_name(cfg.frame));
  int code = exit_certified;
  std::optional<frames::FrameBoundsReport> bounds;
  try {
    bounds = frames::frame_bounds(cfg.frame, cfg.frame_check.N, cfg.frame_check.with_half);
    j["frame_bounds"] = bounds_json(*bounds);
    j["error"] = nullptr;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::singular_section) throw;
    j["frame_bounds"] = nullptr;
    j["error"] = e.what();
    code = exit_not_certified;
  }
  json loc = nullptr;
  if (const auto* H = std::get_if<frames::HermiteFrame>(&cfg.frame)) {
    loc = localization_json(frames::localization_decay(frames::cross_gramian(*H), cfg.frame_check.gammas));
  } else if (const auto* G = std::get_if<frames::GaborSystem>(&cfg.frame)) {
    int cols = cfg.frame_check.cols;
    if (cols <= 0) cols = bounds ? bounds->reference_dim : 64;
    loc = localization_json(frames::localization_decay(frames::cross_gramian(*G, cols), cfg.frame_check.gammas));
  }
  j["localization"] = loc;
  write_file(out / cfg.outputs.frame_check, dump(j));
  if (bounds) log << "A = " << shortest(bounds->A) << ", B = " << shortest(bounds->B) << "\n";
  else log << "frame check: " << j["error"].get<std::string>() << "\n";
  return code;
}

int run(int argc, char** argv) {
  CLI::App app{"frameasym: frame-coefficient asymptotic analysis"};
  app.set_version_flag("--version", std::string(FRAMEASYM_VERSION));
  std::string config;
  std::string out = ".";
  long threads = -1;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config, "experiment configuration (JSON)");
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = auto; default FRAMEASYM_THREADS or auto)")
      ->check(CLI::Range(0L, 4096L));
  app.add_option("--seed", seed, "seed for randomized frame matrices");
  auto* analyze = app.add_subcommand("analyze", "run the asymptotic analysis and write the report");
  auto* coeffs = app.add_subcommand("coeffs", "write one coefficient CSV per ladder scale");
  auto* check = app.add_subcommand("frame-check", "frame bounds and localization fit");
  for (auto* s : {analyze, coeffs, check}) s->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_error;
  }
  if (config.empty()) {
    std::cerr << "frameasym: --config is required\n";
    return exit_error;
  }
  try {
    set_thread_count(resolve_thread_count(threads));
    const ExperimentConfig cfg = load_config(config, seed);
    if (analyze->parsed()) return cmd_analyze(cfg, out, std::cout);
    if (coeffs->parsed()) return cmd_coeffs(cfg, out, std::cout);
    return cmd_frame_check(cfg, out, std::cout);
  } catch (const Error& e) {
    std::cerr << "frameasym: " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "frameasym: " << e.what() << "\n";
    return exit_error;
  }
}

}  // namespace frameasym::cli
