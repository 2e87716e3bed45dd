// Copyright 2026 The qps Authors
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

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "qps/selector/search.hpp"

namespace qps {

namespace {

nlohmann::json optional_number(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

nlohmann::json combo_json(const PassCombination& p) {
  return {{"label", p.label()},
          {"mapper", std::string(mapper_name(p.mapper))},
          {"router", std::string(router_name(p.router))},
          {"scheduler", std::string(scheduler_name(p.scheduler))},
          {"trios", p.trios},
          {"dd", p.dd}};
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", *v);
  return buf;
}

}  // namespace

std::string report_to_json(const SelectionReport& r, bool include_timings) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["method"] = r.method;
  j["k"] = r.k;
  j["seed"] = r.seed;
  j["epoch"] = r.epoch;
  j["shot_reduction"] = r.shot_reduction;
  j["baseline_shots"] = r.baseline_shots;
  j["evaluated"] = r.evaluated();
  j["total_dummy_shots"] = r.total_dummy_shots;
  j["shot_overhead"] = static_cast<double>(r.total_dummy_shots) / static_cast<double>(r.baseline_shots);
  j["chosen"] = r.chosen ? nlohmann::json(combo_json(*r.chosen)) : nlohmann::json();
  j["chosen_dummy_pst"] = r.chosen_dummy_pst;
  j["final_pst"] = optional_number(r.final_pst);
  auto& records = j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    nlohmann::ordered_json o;
    o["index"] = rec.index;
    o["chunk"] = rec.chunk;
    o["combo"] = combo_json(rec.combo);
    o["failed"] = rec.failed;
    if (rec.failed) o["error"] = rec.error;
    o["dummy_stats"] = {{"depth", rec.stats.depth},
                        {"gates", rec.stats.total_gates},
                        {"cx", rec.stats.cx_count},
                        {"non_clifford", rec.stats.non_clifford}};
    o["target_peaks"] = rec.target_peaks;
    o["peaks"] = rec.peaks;
    o["cliffordize_attempts"] = rec.attempts;
    o["shots"] = rec.shots;
    o["dummy_pst"] = rec.dummy_pst;
    o["esp"] = optional_number(rec.esp);
    o["noise_model_pst"] = optional_number(rec.noise_model_pst);
    o["oracle_pst"] = optional_number(rec.oracle_pst);
    records.push_back(std::move(o));
  }
  j["esp_ranking"] = r.esp_ranking;
  j["noise_model_ranking"] = r.noise_model_ranking;
  if (r.oracle) {
    nlohmann::ordered_json o;
    o["best"] = combo_json(r.oracle->best);
    o["best_pst"] = r.oracle->best_pst;
    auto& modes = o["modes"] = nlohmann::ordered_json::array();
    for (const auto& m : r.oracle->modes) {
      modes.push_back({{"mode", m.mode},
                       {"combo", m.combo.label()},
                       {"pst", m.pst},
                       {"relative_fidelity", m.relative.value},
                       {"relative_fidelity_raw", m.relative.raw}});
    }
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  if (include_timings) {
    j["timings"] = {{"transpile_s", r.timings.transpile_s},   {"cliffordize_s", r.timings.cliffordize_s},
                    {"simulate_s", r.timings.simulate_s},     {"execute_s", r.timings.execute_s},
                    {"baselines_s", r.timings.baselines_s},   {"total_s", r.timings.total_s}};
  }
  return j.dump(2) + "\n";
}

std::string report_to_csv(const SelectionReport& r) {
  std::ostringstream out;
  out << "index,chunk,mapper,router,scheduler,trios,dd,failed,cx_count,depth,peaks,shots,dummy_pst,esp,"
         "noise_model_pst,oracle_pst\n";
  for (const auto& rec : r.records) {
    out << rec.index << ',' << rec.chunk << ',' << mapper_name(rec.combo.mapper) << ','
        << router_name(rec.combo.router) << ',' << scheduler_name(rec.combo.scheduler) << ',' << int(rec.combo.trios)
        << ',' << int(rec.combo.dd) << ',' << int(rec.failed) << ',' << rec.stats.cx_count << ',' << rec.stats.depth
        << ',' << rec.peaks << ',' << rec.shots << ',' << csv_number(rec.dummy_pst) << ',' << csv_number(rec.esp)
        << ',' << csv_number(rec.noise_model_pst) << ',' << csv_number(rec.oracle_pst) << '\n';
  }
  return out.str();
}

}  // namespace qps
