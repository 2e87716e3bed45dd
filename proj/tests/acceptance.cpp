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

// Acceptance suite. Prints one PASS/FAIL line per criterion; run with
// criterion ids (c1..c9) to select a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "oracle.hpp"
#include "qps/bench/generators.hpp"
#include "qps/clifford/cliffordize.hpp"
#include "qps/clifford/simulate.hpp"
#include "qps/emulator/execute.hpp"
#include "qps/ir/analysis.hpp"
#include "qps/passes/pipeline.hpp"
#include "qps/passes/schedule.hpp"
#include "qps/selector/search.hpp"
#include "qps/util/random.hpp"

namespace fs = std::filesystem;
using namespace qps;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const DeviceModel& heavy_hex() {
  static const DeviceModel d = load_device_model(QPS_DATA_DIR "/devices/heavy_hex_27.json");
  return d;
}

Circuit bench(const std::string& name) { return gen_benchmark(*parse_benchmark_name(name)); }

const std::vector<std::string> kSuite{"bv5", "bv7", "ghz5", "ghz8", "qaoa5", "adder6", "cnx7", "cnxdirty7", "pea5"};

std::string num(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Standard error of the mean.
double sem(const std::vector<double>& v) {
  const double m = mean(v);
  double ss = 0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

Outcome c1() {
  const SearchSpace s;
  const std::size_t full = enumerate_combinations(s).size();
  const std::size_t mrs = enumerate_combinations(SearchSpace::mrs_only()).size();
  SelectOptions o;
  o.noise_model_baseline = false;
  o.final_run = false;
  const DeviceModel& d = heavy_hex();
  const Circuit c = bench("bv5");
  const std::size_t e1 = optran_e(c, d, make_scenario(d), s, 1, o).evaluated();
  const std::size_t e3 = optran_e(c, d, make_scenario(d), s, 3, o).evaluated();
  const double r1 = 100.0 * (1.0 - static_cast<double>(e1) / static_cast<double>(full));
  const double r3 = 100.0 * (1.0 - static_cast<double>(e3) / static_cast<double>(full));
  const bool pass = full == 72 && mrs == 18 && e1 == 22 && e3 == 30 && std::round(r1 * 100) == 6944 &&
                    std::round(r3 * 100) == 5833;
  return {pass, "space " + std::to_string(full) + ", mrs " + std::to_string(mrs) + ", e1 " + std::to_string(e1) +
                    ", e3 " + std::to_string(e3) + ", reductions " + num(r1, 2) + "% / " + num(r3, 2) + "%"};
}

// Reference overheads are given truncated to two decimals.
double truncate2(double x) { return std::floor(x * 100.0 + 1e-9) / 100.0; }

Outcome c2() {
  const DeviceModel& d = heavy_hex();
  const NoiseParams np = make_scenario(d);
  SelectOptions o;
  o.noise_model_baseline = false;
  o.final_run = false;
  o.exec.trajectories = 64;
  struct Row {
    std::string family, bench;
    double optran, e1;
  };
  const std::vector<Row> rows{{"bv", "bv10", 1.75, 0.53}, {"ghz", "ghz12", 3.51, 1.06}};
  bool pass = true;
  std::string detail;
  for (const Row& r : rows) {
    const Circuit c = bench(r.bench);
    const double full = static_cast<double>(optran(c, d, np, SearchSpace{}, o).total_dummy_shots) / 8192.0;
    const double e1 = static_cast<double>(optran_e(c, d, np, SearchSpace{}, 1, o).total_dummy_shots) / 8192.0;
    const bool ok_full = truncate2(full) == r.optran;
    const bool ok_e1 = truncate2(e1) == r.e1;
    pass = pass && ok_full && ok_e1;
    detail += r.family + " " + num(full) + "x (want " + num(r.optran, 2) + (ok_full ? ", ok" : ", MISMATCH") +
              ") / " + num(e1) + "x (want " + num(r.e1, 2) + (ok_e1 ? ", ok" : ", MISMATCH") + "); ";
  }
  return {pass, detail};
}

Circuit random_clifford(int n, int gates, Rng& rng) {
  Circuit c(n, n);
  for (int g = 0; g < gates; ++g) {
    const int q = static_cast<int>(uniform_index(rng, n));
    switch (uniform_index(rng, n > 1 ? 7 : 6)) {
      case 0: c.h(q); break;
      case 1: c.s(q); break;
      case 2: c.x(q); break;
      case 3: c.sx(q); break;
      case 4: c.z(q); break;
      case 5: c.rz(q, std::numbers::pi / 2 * static_cast<double>(uniform_index(rng, 4))); break;
      default: {
        int t = static_cast<int>(uniform_index(rng, n - 1));
        if (t >= q) ++t;
        c.cx(q, t);
      }
    }
  }
  c.measure_all();
  return c;
}

Outcome c3() {
  Rng rng(2024);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 8));
    const int g = 1 + static_cast<int>(uniform_index(rng, 60));
    const Circuit c = random_clifford(n, g, rng);
    const Distribution a = stabilizer_simulate(c);
    const Distribution b = statevector_simulate(c);
    worst = std::max(worst, oracle::max_deviation(a.probabilities(), b.probabilities()));
  }
  return {worst <= 1e-9, "100 circuits, max deviation " + std::to_string(worst)};
}

const std::vector<std::string> kSmallSuite{"bv5",   "bv7",  "ghz5", "ghz8",      "qaoa5",
                                           "adder6", "cnx7", "cnxdirty7", "pea5", "bv10"};

Outcome c4() {
  const DeviceModel& d = heavy_hex();
  const auto combos = enumerate_combinations(SearchSpace{});
  double worst = 0;
  int checked = 0;
  for (const auto& name : kSmallSuite) {
    const Circuit c = bench(name);
    const auto ideal = oracle::distribution(c);
    for (std::size_t i = 0; i < combos.size(); ++i) {
      const Circuit t = run_pipeline(c, d, combos[i], combo_seed(1, i));
      worst = std::max(worst, oracle::max_deviation(oracle::distribution(t), ideal));
      ++checked;
    }
  }
  return {worst <= 1e-9, std::to_string(kSmallSuite.size()) + " benchmarks, " + std::to_string(checked) +
                             " outputs, max deviation " + std::to_string(worst)};
}

Outcome c5() {
  const DeviceModel& d = heavy_hex();
  const auto combos = enumerate_combinations(SearchSpace{});
  const double bound = std::numbers::pi / 4 + std::numbers::pi / 100 + 1e-12;
  int pairs = 0, bad = 0;
  double max_shift = 0;
  for (const auto& name : kSmallSuite) {
    const Circuit c = bench(name);
    const std::uint64_t peaks = count_peaks(statevector_simulate(c));
    for (std::size_t i = 0; i < combos.size(); ++i) {
      const std::uint64_t seed = combo_seed(1, i);
      const Circuit t = run_pipeline(c, d, combos[i], seed);
      CliffordizeConfig cfg;
      cfg.seed = derive_seed(seed, 3);
      const Circuit dummy = cliffordize(t, peaks, cfg).circuit;
      ++pairs;
      bool ok = dummy.instructions().size() == t.instructions().size() &&
                circuit_stats(dummy).cx_count == circuit_stats(t).cx_count &&
                circuit_stats(dummy).depth == circuit_stats(t).depth;
      for (std::size_t k = 0; ok && k < t.instructions().size(); ++k) {
        const Instruction& a = t.instructions()[k];
        const Instruction& b = dummy.instructions()[k];
        if (a.gate != b.gate || a.qubits != b.qubits) {
          ok = false;
        } else if (a.gate == Gate::RZ) {
          const double quarter = b.angle / (std::numbers::pi / 2);
          if (std::abs(quarter - std::round(quarter)) > 1e-9) ok = false;
          const double shift = std::remainder(b.angle - a.angle, 2 * std::numbers::pi);
          max_shift = std::max(max_shift, std::abs(shift));
          if (std::abs(shift) > bound) ok = false;
        }
      }
      if (!ok) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " violations, max angle shift " +
                        num(max_shift / std::numbers::pi, 4) + " pi"};
}

Outcome c6() {
  const DeviceModel& d = heavy_hex();
  const NoiseParams np = load_noise_params(QPS_DATA_DIR "/noise/biased.json", d);
  SelectOptions o;
  o.shot_reduction = false;
  o.noise_model_baseline = false;
  o.final_run = false;
  bool pass = true;
  std::string detail;
  for (const char* name : {"ghz12", "bv10"}) {
    const Circuit c = bench(name);
    const SelectionReport r = optran(c, d, np, SearchSpace::mrs_only(), o);
    const OracleResult orc = oracle_search(c, d, np, SearchSpace::mrs_only(), o);
    std::vector<double> dummy, original;
    for (const auto& rec : r.records) {
      dummy.push_back(rec.dummy_pst);
      original.push_back(orc.pst_of(rec.combo));
    }
    const double rho = correlation(dummy, original);
    pass = pass && rho >= 0.9;
    detail += std::string(name) + " r=" + num(rho) + "; ";
  }
  return {pass, detail};
}

Outcome c7() {
  const DeviceModel& d = heavy_hex();
  const std::vector<std::string> modes{"optran", "esp", "default", "e1", "e3"};
  std::vector<std::vector<double>> per_seed(modes.size());
  for (int seed = 0; seed < 5; ++seed) {
    std::vector<double> sum(modes.size(), 0.0);
    int n = 0;
    for (int sc = 1; sc <= 3; ++sc) {
      const NoiseParams np =
          load_noise_params(std::string(QPS_DATA_DIR) + "/noise/drift_" + std::to_string(sc) + ".json", d);
      for (const auto& name : kSuite) {
        const Circuit c = bench(name);
        SelectOptions o;
        o.seed = derive_seed(static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(sc));
        o.noise_model_baseline = false;
        o.final_run = false;
        o.exec.trajectories = 256;
        const OracleResult orc = oracle_search(c, d, np, SearchSpace{}, o);
        SelectionReport r = optran(c, d, np, SearchSpace{}, o);
        attach_oracle(r, orc);
        auto rel = [&](const PassCombination& p) {
          return fidelity_relative_to_oracle(orc.pst_of(p), orc.best_pst).value;
        };
        sum[0] += rel(*r.chosen);
        sum[1] += rel(*parse_combination(r.esp_ranking.front()));
        sum[2] += rel(PassCombination{});
        sum[3] += rel(*optran_e(c, d, np, SearchSpace{}, 1, o).chosen);
        sum[4] += rel(*optran_e(c, d, np, SearchSpace{}, 3, o).chosen);
        ++n;
      }
    }
    for (std::size_t m = 0; m < modes.size(); ++m) per_seed[m].push_back(sum[m] / n);
  }
  auto diff = [&](std::size_t a, std::size_t b) {
    std::vector<double> v;
    for (std::size_t i = 0; i < per_seed[a].size(); ++i) v.push_back(per_seed[a][i] - per_seed[b][i]);
    return v;
  };
  const auto vs_default = diff(0, 2), vs_esp = diff(0, 1), e1 = diff(3, 0), e3 = diff(4, 0);
  const bool a = mean(vs_default) >= -3 * sem(vs_default);
  const bool b = mean(vs_esp) >= -3 * sem(vs_esp);
  const bool c = mean(per_seed[0]) >= 0.85 - 3 * sem(per_seed[0]);
  const bool d1 = std::abs(mean(e1)) <= 0.15 + 3 * sem(e1);
  const bool d3 = std::abs(mean(e3)) <= 0.15 + 3 * sem(e3);
  std::string detail;
  for (std::size_t m = 0; m < modes.size(); ++m)
    detail += modes[m] + " " + num(mean(per_seed[m])) + "+-" + num(sem(per_seed[m])) + "; ";
  detail += std::string("a ") + (a ? "ok" : "FAIL") + ", b " + (b ? "ok" : "FAIL") + ", c " + (c ? "ok" : "FAIL") +
            ", e1 " + (d1 ? "ok" : "FAIL") + ", e3 " + (d3 ? "ok" : "FAIL");
  return {a && b && c && d1 && d3, detail};
}

DeviceModel pair_device() {
  DeviceModel::Spec s;
  s.num_qubits = 2;
  s.coupling = {{0, 1}};
  s.calibration.cx_error[{0, 1}] = 0.012;
  s.calibration.readout_error = {0.026, 0.026};
  s.t1 = {1e7, 1e7};
  s.t2 = {1e7, 1e7};
  return DeviceModel(std::move(s));
}

Outcome c8() {
  const DeviceModel d = pair_device();
  Circuit c(2, 2);
  c.cx(0, 1).measure_all();
  const double esp = esp_predict(schedule(c, d, Scheduler::Asap), d);
  bool ok = std::abs(esp - 0.9373) <= 1e-4;

  Rng rng(8);
  std::vector<Instruction> body;
  double prev = 1.0;
  int appended = 0;
  for (int step = 0; step <= 40; ++step) {
    Circuit k(2, 2);
    for (const auto& ins : body) k.append(ins);
    k.measure_all();
    const double e = esp_predict(schedule(k, d, Scheduler::Asap), d);
    if (step > 0 && !(e < prev)) ok = false;
    prev = e;
    const int q = static_cast<int>(uniform_index(rng, 2));
    switch (uniform_index(rng, 4)) {
      case 0: body.push_back(make_gate(Gate::X, {q})); break;
      case 1: body.push_back(make_gate(Gate::SX, {q})); break;
      case 2: body.push_back(make_rz(q, 0.3)); break;
      default: body.push_back(make_gate(Gate::CX, {q, 1 - q}));
    }
    ++appended;
  }
  return {ok, "esp " + num(esp, 6) + " (want 0.9373), strictly decreasing over " + std::to_string(appended - 1) +
                  " appends: " + (ok ? "yes" : "no")};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string without_timings(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("timings");
  return j.dump();
}

Outcome c9() {
  const fs::path root = fs::temp_directory_path() / ("qps_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(root);
  const std::string cli = QPS_CLI;
  const std::string dev = QPS_DATA_DIR "/devices/heavy_hex_27.json";
  const std::string noise = QPS_DATA_DIR "/noise/drift_2.json";
  {
    std::ofstream s(root / "suite.json");
    s << R"({"benchmarks": ["bv5", "ghz5", "adder6"]})";
  }
  struct Cmd {
    std::string name, args;
    std::vector<std::string> files;
  };
  const std::vector<Cmd> cmds{
      {"gen-bench", "gen bench qaoa6 --out @/q.qasm", {"q.qasm"}},
      {"gen-scenario", "gen scenario --device " + dev + " --seed 4 --jitter 0.5 --out @/n.json", {"n.json"}},
      {"transpile", "transpile --bench cnx7 --device " + dev + " --mapper noise_adaptive --router stochastic --dd --seed 3 --out @/t.qasm", {"t.qasm"}},
      {"select", "select --bench qaoa5 --device " + dev + " --noise " + noise + " --oracle --seed 11 --trajectories 128 --out @/s", {"s.json", "s.csv"}},
      {"select-e", "select --bench pea5 --device " + dev + " --noise " + noise + " --method optran-e --k 2 --seed 11 --trajectories 128 --out @/e", {"e.json", "e.csv"}},
      {"bench", "bench --suite @/../suite.json --device " + dev + " --noise " + noise + " --seed 2 --trajectories 128 --out-dir @/b", {"b/summary.csv", "b/bv5.json", "b/adder6.json"}},
  };
  bool pass = true;
  std::string detail;
  for (const auto& cmd : cmds) {
    std::string outputs[2];
    bool ok = true;
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / (cmd.name + "_" + std::to_string(run));
      fs::create_directories(dir);
      std::string args = cmd.args;
      for (std::size_t p; (p = args.find('@')) != std::string::npos;) args.replace(p, 1, dir.string());
      const std::string line = cli + " " + args + " > " + (dir / "stdout").string() + " 2>&1";
      if (std::system(line.c_str()) != 0) ok = false;
      for (const auto& f : cmd.files) {
        std::string text = slurp(dir / f);
        if (f.ends_with(".json") && !text.empty() && text.front() == '{' && text.find("\"timings\"") != std::string::npos)
          text = without_timings(text);
        outputs[run] += f + "\n" + text;
      }
    }
    ok = ok && !outputs[0].empty() && outputs[0] == outputs[1];
    pass = pass && ok;
    detail += cmd.name + (ok ? " ok; " : " DIFFERS; ");
  }
  fs::remove_all(root);
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"c1", c1}, {"c2", c2}, {"c3", c3}, {"c4", c4}, {"c5", c5},
      {"c6", c6}, {"c7", c7}, {"c8", c8}, {"c9", c9}};
  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [id, fn] : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << " (" << num(secs, 1) << " s) " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
