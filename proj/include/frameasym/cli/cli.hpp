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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frameasym/asymptotics/asymptotics.hpp"

namespace frameasym::cli {

using json = nlohmann::json;

enum class AnalysisMode { tauberian, polynomial, monotone };

struct Outputs {
  std::string report = "report.json";
  std::string limits_csv = "limits.csv";
  std::string ratios_csv = "ratios.csv";
  std::string coeffs_prefix = "coeffs";
  std::string frame_check = "frame_check.json";
};

struct FrameCheckOptions {
  int N = 12;
  bool with_half = true;
  std::vector<double> gammas = frames::default_gamma_grid();
  /// Hermite columns of the Gabor cross-Gramian; 0 uses the reference dimension.
  int cols = 0;
};

/// Parsed experiment. `echo` is the normalized document (all defaults
/// filled in); parsing it again yields the same experiment.
struct ExperimentConfig {
  json echo;
  Distribution f;
  /// Pointwise evaluator for regular distributions (monotone route).
  std::function<double(double)> f_eval;
  frames::FrameSystem frame;
  Regime regime = Regime::origin;
  double x0 = 0.0;
  asymptotics::Ladder ladder;
  std::vector<double> x_ladder;
  std::optional<asymptotics::SlowlyVarying> L;
  AnalysisMode mode = AnalysisMode::tauberian;
  double alpha = 0.0;
  double b = 0.0;
  asymptotics::PipelineConfig pipeline;
  asymptotics::PolynomialOptions polynomial;
  FrameCheckOptions frame_check;
  Outputs outputs;

  /// Scales the coefficient grids are computed at (x positions in the shift regime).
  std::vector<double> scales() const;
};

/// Strict parse: unknown fields and type mismatches raise Error(config)
/// naming the JSON path; syntax errors carry line and column.
ExperimentConfig parse_config(const std::string& text, std::optional<std::uint64_t> seed_override = {});
ExperimentConfig load_config(const std::filesystem::path& path, std::optional<std::uint64_t> seed_override = {});

/// Sorted keys, shortest round-trip numbers, non-finite values as strings.
std::string dump(const json& j);
json number(double v);

json report_json(const ExperimentConfig& cfg, const asymptotics::AsymptoticsReport& rep);

enum ExitCode : int { exit_certified = 0, exit_error = 1, exit_not_certified = 2 };

int cmd_analyze(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream& log);
int cmd_coeffs(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream& log);
int cmd_frame_check(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream& log);

/// Command-line entry point.
int run(int argc, char** argv);

}  // namespace frameasym::cli
