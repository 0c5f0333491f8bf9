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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "frameasym/frames/frames.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path kExe = FRAMEASYM_EXE;
const fs::path kData = FRAMEASYM_DATA;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("frameasym-e2e-" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const fs::path& p) {
  const std::string s = slurp(p);
  return s.substr(0, s.find('\n'));
}

struct Run {
  int code = -1;
  std::string err;
};

Run invoke(const std::string& args, const fs::path& out, const std::string& env = "") {
  const fs::path err = out / "stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + kExe.string() + " " + args + " --out " + out.string() +
                          " > " + (out / "stdout.txt").string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err);
  return r;
}

Run analyze(const std::string& config, const fs::path& out, const std::string& extra = "") {
  return invoke("analyze --config " + (kData / config).string() + " " + extra, out);
}

json report(const fs::path& out) { return json::parse(slurp(out / "report.json")); }

// Parses one CSV row "i1,i2,scale,re,im".
struct Row {
  int i1, i2;
  double scale, re, im;
};

std::vector<Row> rows(const fs::path& csv) {
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "index1,index2,scale,re,im");
  std::vector<Row> out;
  while (std::getline(in, line)) {
    Row r{};
    char c;
    std::istringstream ss(line);
    ss >> r.i1 >> c >> r.i2 >> c >> r.scale >> c >> r.re >> c >> r.im;
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(Analyze, DeltaOriginWaveletCertified) {
  const auto out = scratch("delta");
  const auto r = analyze("delta-origin-wavelet.json", out);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = report(out);
  EXPECT_EQ(j["schema"], "frameasym-report/1");
  EXPECT_EQ(j["verdict"], "certified");
  EXPECT_NEAR(j["alpha"].get<double>(), -1.0, 1e-3);
  EXPECT_TRUE(j["bound"]["bounded"].get<bool>());
  EXPECT_LT(j["abelian_residual"].get<double>(), 1e-3);
  EXPECT_EQ(first_line(out / "limits.csv"), "index1,index2,re,im,last_change,convergent");
  EXPECT_EQ(first_line(out / "ratios.csv"), "index1,index2,scale,re,im");
}

TEST(Analyze, Exp2xGaborCertified) {
  const auto out = scratch("exp2x");
  const auto r = analyze("exp2x-gabor.json", out);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = report(out);
  EXPECT_NEAR(j["b"].get<double>(), 2.0, 1e-3);
  EXPECT_NEAR(j["C"].get<double>(), 1.0, 1e-3);
  EXPECT_NEAR(j["C_imag"].get<double>(), 0.0, 1e-3);
  EXPECT_EQ(j["bound"]["family"], "gabor");
}

TEST(Analyze, UnknownFieldRejected) {
  const auto out = scratch("unknown");
  const auto r = analyze("unknown-field.json", out);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("alpha_max"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("$.frame"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(out / "report.json"));
}

TEST(Analyze, MalformedConfigNamesLine) {
  const auto out = scratch("malformed");
  const auto r = analyze("malformed.json", out);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Analyze, MissingConfigIsInputError) {
  const auto out = scratch("missing");
  EXPECT_EQ(analyze("does-not-exist.json", out).code, 1);
  EXPECT_EQ(invoke("analyze", out).code, 1);
  EXPECT_EQ(invoke("bogus --config x", out).code, 1);
}

TEST(Analyze, NotCertifiedStillWritesReport) {
  const auto out = scratch("xlog");
  const auto r = analyze("xlog-hermite-constant.json", out);
  ASSERT_EQ(r.code, 2) << r.err;
  const auto j = report(out);
  EXPECT_FALSE(j["certified"].get<bool>());
  ASSERT_FALSE(j["reasons"].empty());
  EXPECT_NE(j["reasons"][0].get<std::string>().find("NonPowerLawBehavior"), std::string::npos);
}

TEST(Analyze, OtherRoutes) {
  {
    const auto out = scratch("xhalf");
    ASSERT_EQ(analyze("xhalf-hermite.json", out).code, 0);
    EXPECT_NEAR(report(out)["alpha"].get<double>(), 0.5, 1e-3);
  }
  {
    const auto out = scratch("monotone");
    ASSERT_EQ(analyze("exp-monotone.json", out).code, 0);
    EXPECT_NEAR(report(out)["monotone"]["limit"].get<double>(), 0.5, 5e-3);
  }
  {
    const auto out = scratch("poly");
    ASSERT_EQ(analyze("poly-extract.json", out).code, 0);
    const auto c = report(out)["polynomial"]["coeffs"];
    ASSERT_EQ(c.size(), 2u);
    EXPECT_NEAR(c[0].get<double>(), 3.0, 1e-2);
    EXPECT_NEAR(c[1].get<double>(), 2.0, 1e-2);
  }
}

TEST(Analyze, EchoRoundTripsToSameBytes) {
  const auto a = scratch("echo-a"), b = scratch("echo-b");
  ASSERT_EQ(analyze("exp2x-gabor.json", a).code, 0);
  std::ofstream(a / "echo.json") << report(a)["config"].dump();
  ASSERT_EQ(invoke("analyze --config " + (a / "echo.json").string(), b).code, 0);
  EXPECT_EQ(report(a)["config"], report(b)["config"]);
  EXPECT_EQ(slurp(a / "report.json"), slurp(b / "report.json"));
}

TEST(Analyze, BytesIndependentOfThreads) {
  const auto a = scratch("thr1"), b = scratch("thr4"), c = scratch("thr-env");
  ASSERT_EQ(analyze("exp2x-gabor.json", a, "--threads 1").code, 0);
  ASSERT_EQ(analyze("exp2x-gabor.json", b, "--threads 4").code, 0);
  ASSERT_EQ(invoke("analyze --config " + (kData / "exp2x-gabor.json").string() + " --threads 0", c,
                      "FRAMEASYM_THREADS=3")
                .code,
            0);
  EXPECT_EQ(slurp(a / "report.json"), slurp(b / "report.json"));
  EXPECT_EQ(slurp(a / "report.json"), slurp(c / "report.json"));
  EXPECT_EQ(slurp(a / "ratios.csv"), slurp(b / "ratios.csv"));
}

TEST(Coeffs, GaussianInGaborIsUnitAtOrigin) {
  const auto out = scratch("gauss");
  ASSERT_EQ(invoke("coeffs --config " + (kData / "gaussian-gabor-coeffs.json").string(), out).code, 0);
  const auto g = rows(out / "gauss_000.csv");
  ASSERT_EQ(g.size(), 9u * 5u);
  bool found = false;
  for (const auto& r : g)
    if (r.i1 == 0 && r.i2 == 0) {
      found = true;
      EXPECT_NEAR(r.re, 1.0, 1e-8);
      EXPECT_NEAR(r.im, 0.0, 1e-8);
    }
  EXPECT_TRUE(found);
  EXPECT_TRUE(fs::exists(out / "gauss_001.csv"));
}

TEST(Coeffs, DeltaWaveletSubstitution) {
  const auto out = scratch("dcoef");
  ASSERT_EQ(invoke("coeffs --config " + (kData / "delta-wavelet-coeffs.json").string(), out).code, 0);
  for (const auto& r : rows(out / "coeffs_000.csv")) {
    ASSERT_EQ(r.scale, 0.25);
    const auto expect = 4.0 * std::conj(frameasym::frames::wavelet_element(r.i1, r.i2)(0.0));
    EXPECT_NEAR(r.re, expect.real(), 1e-12) << r.i1 << "," << r.i2;
    EXPECT_NEAR(r.im, expect.imag(), 1e-12);
  }
}

TEST(Coeffs, ZeroDistributionGivesZeroGrids) {
  const auto a = scratch("zero-1"), b = scratch("zero-4");
  ASSERT_EQ(invoke("coeffs --threads 1 --config " + (kData / "zero-coeffs.json").string(), a).code, 0);
  ASSERT_EQ(invoke("coeffs --threads 4 --config " + (kData / "zero-coeffs.json").string(), b).code, 0);
  for (const char* name : {"coeffs_000.csv", "coeffs_001.csv", "coeffs_002.csv"}) {
    const auto g = rows(a / name);
    EXPECT_FALSE(g.empty());
    for (const auto& r : g) {
      EXPECT_EQ(r.re, 0.0);
      EXPECT_EQ(r.im, 0.0);
    }
    EXPECT_EQ(slurp(a / name), slurp(b / name));
  }
}

TEST(FrameCheck, HermiteIdentity) {
  const auto out = scratch("fc-id");
  ASSERT_EQ(invoke("frame-check --config " + (kData / "hermite-identity-check.json").string(), out).code, 0);
  const auto j = json::parse(slurp(out / "frame_check.json"));
  EXPECT_NEAR(j["frame_bounds"]["A"].get<double>(), 1.0, 1e-10);
  EXPECT_NEAR(j["frame_bounds"]["B"].get<double>(), 1.0, 1e-10);
  EXPECT_EQ(j["localization"]["gamma_fit"], "inf");
}

TEST(FrameCheck, GaborGaussianStable) {
  const auto out = scratch("fc-gabor");
  ASSERT_EQ(invoke("frame-check --config " + (kData / "gabor-check.json").string(), out).code, 0);
  const auto j = json::parse(slurp(out / "frame_check.json"));
  EXPECT_GT(j["frame_bounds"]["A"].get<double>(), 0.0);
  EXPECT_LT(j["frame_bounds"]["change_vs_half"].get<double>(), 0.05);
  EXPECT_TRUE(j["localization"]["gamma_fit"].is_number());
}

TEST(FrameCheck, BandedMatchesBruteForce) {
  const auto out = scratch("fc-band");
  ASSERT_EQ(invoke("frame-check --config " + (kData / "banded-check.json").string(), out).code, 0);
  const auto j = json::parse(slurp(out / "frame_check.json"));
  const auto M = frameasym::frames::HermiteFrame::banded_random(32, 2, 1).M;
  const auto& gammas = j["localization"]["gammas"];
  const auto& C = j["localization"]["C"];
  ASSERT_EQ(gammas.size(), C.size());
  ASSERT_FALSE(gammas.empty());
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    double brute = 0.0;
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < M.cols(); ++c)
        brute = std::max(brute, std::abs(M(r, c)) * std::pow(1.0 + std::abs(r - c), gammas[g].get<double>()));
    EXPECT_NEAR(C[g].get<double>(), brute, 1e-12 * brute) << "gamma " << gammas[g];
  }
}

TEST(FrameCheck, SeedOverrideChangesMatrix) {
  const auto a = scratch("seed-a"), b = scratch("seed-b");
  ASSERT_EQ(invoke("frame-check --config " + (kData / "banded-check.json").string(), a).code, 0);
  ASSERT_EQ(invoke("frame-check --seed 99 --config " + (kData / "banded-check.json").string(), b).code, 0);
  const auto ja = json::parse(slurp(a / "frame_check.json"));
  const auto jb = json::parse(slurp(b / "frame_check.json"));
  EXPECT_EQ(jb["config"]["frame"]["seed"], 99);
  EXPECT_NE(ja["frame_bounds"]["A"], jb["frame_bounds"]["A"]);
}
