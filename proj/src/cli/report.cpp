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

#include "frameasym/cli/cli.hpp"

namespace frameasym::cli {

using namespace asymptotics;

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

json index_json(const std::array<int, 2>& i) { return json::array({i[0], i[1]}); }

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

json L_json(const SlowlyVarying& L) {
  return {{"description", L.describe()},
          {"log_exponent", number(L.log_exponent())},
          {"constant", number(L.constant_factor())},
          {"bound", number(L.bound)},
          {"regime", std::string(regime_name(L.regime))}};
}

json degree_json(const DegreeEstimate& d) {
  json cross = json::array();
  for (std::size_t k = 0; k < d.cross_indices.size(); ++k)
    cross.push_back({{"index", index_json(d.cross_indices[k])}, {"alpha", number(d.cross_alphas[k])}});
  return {{"alpha", number(d.alpha)},         {"intercept", number(d.intercept)},
          {"residual", number(d.residual)},   {"dispersion", number(d.dispersion)},
          {"reference", index_json(d.reference)}, {"cross_checks", cross},
          {"rungs_used", d.rungs_used}};
}

json limits_json(const LimitTable& t) {
  double worst = 0.0;
  json entries = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    worst = std::max(worst, t.last_change[k]);
    entries.push_back({{"index", index_json(t.indices[k])},
                       {"re", number(t.limits[k].real())},
                       {"im", number(t.limits[k].imag())},
                       {"last_change", number(t.last_change[k])},
                       {"convergent", t.convergent[k] != 0}});
  }
  return {{"index_names", json::array({t.index1_name, t.index2_name})},
          {"count", t.size()},
          {"convergent", t.convergent_count()},
          {"all_convergent", t.all_convergent()},
          {"max_last_change", number(worst)},
          {"entries", entries}};
}

json bound_json(const TauberianBoundFit& b) {
  json ex = json::object();
  for (std::size_t k = 0; k < b.exponents.size(); ++k) ex[b.exponent_names[k]] = number(b.exponents[k]);
  json j = {{"family", std::string(family_name(b.family))},
            {"exponents", ex},
            {"C", number(b.C)},
            {"threshold", number(b.threshold)},
            {"bounded", b.bounded},
            {"growth", number(b.growth)},
            {"boundary_hit", b.boundary_hit},
            {"witness", nullptr}};
  if (b.witness)
    j["witness"] = {{"index", index_json(b.witness->index)},
                    {"scale", number(b.witness->scale)},
                    {"ratio", number(b.witness->ratio)},
                    {"ladder", numbers(b.witness->ladder)}};
  return j;
}

}  // namespace

json report_json(const ExperimentConfig& cfg, const AsymptoticsReport& rep) {
  json j;
  j["schema"] = "frameasym-report/1";
  j["version"] = FRAMEASYM_VERSION;
  j["command"] = "analyze";
  j["config"] = cfg.echo;
  j["mode"] = "tauberian";
  j["frame"] = rep.frame;
  j["regime"] = std::string(regime_name(rep.regime));
  j["verdict"] = std::string(verdict_name(rep.verdict));
  j["certified"] = rep.certified();
  j["reasons"] = rep.reasons;
  j["ladder"] = numbers(rep.scales);
  j["L"] = L_json(rep.L);
  j["degree"] = rep.degree ? degree_json(*rep.degree) : json(nullptr);
  j["limits"] = limits_json(rep.limits);
  j["bound"] = bound_json(rep.bound);
  j["abelian_residual"] = number(rep.abelian_residual);
  j["abelian_checked"] = rep.abelian.has_value();
  json syn = json::array();
  for (const auto& p : rep.synthesis)
    syn.push_back({{"probe", p.probe},
                   {"synthesized", json::array({number(p.synthesized.real()), number(p.synthesized.imag())})},
                   {"expected", json::array({number(p.expected.real()), number(p.expected.imag())})},
                   {"rel_error", number(p.rel_error)}});
  j["synthesis"] = {{"probes", syn}, {"max_error", number(rep.synthesis_error)}};

  if (const auto* q = std::get_if<QuasiAsymptoticsModel>(&rep.model)) {
    j["model"] = {{"kind", "quasi"},
                  {"alpha", number(q->alpha)},
                  {"center", number(q->center)},
                  {"at_infinity", q->at_infinity},
                  {"g", q->g.describe()}};
    j["alpha"] = number(q->alpha);
    j["b"] = nullptr;
    j["C"] = nullptr;
    j["C_imag"] = nullptr;
  } else {
    const auto& s = std::get<SAsymptoticsModel>(rep.model);
    j["model"] = {{"kind", "shift"}, {"b", number(s.b)}, {"C", number(s.C.real())}, {"C_imag", number(s.C.imag())}};
    j["alpha"] = nullptr;
    j["b"] = number(s.b);
    j["C"] = number(s.C.real());
    j["C_imag"] = number(s.C.imag());
  }
  if (rep.s_asym) {
    const auto& s = *rep.s_asym;
    j["s_asym"] = {{"c_residual", number(s.c_residual)},
                   {"tail_slopes", numbers(s.tail_slopes)},
                   {"degenerate_zero", s.degenerate_zero}};
  } else {
    j["s_asym"] = nullptr;
  }
  return j;
}

}  // namespace frameasym::cli
