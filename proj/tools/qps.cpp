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

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "qps/bench/generators.hpp"
#include "qps/error.hpp"
#include "qps/ir/analysis.hpp"
#include "qps/ir/qasm.hpp"
#include "qps/passes/pipeline.hpp"
#include "qps/passes/schedule.hpp"
#include "qps/selector/search.hpp"
#include "qps/util/random.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qps::ValidationError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw qps::ValidationError("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw qps::ValidationError("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, path);
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw qps::ValidationError("config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw qps::ValidationError("config '" + path + "' must be a JSON object");
  return j;
}

// Fills `var` from the config key when the flag was not given.
template <class T>
void from_config(const json& cfg, const CLI::App* app, const std::string& flag, T& var) {
  std::string key = flag;
  for (char& ch : key)
    if (ch == '-') ch = '_';
  if (app->get_option("--" + flag)->count() > 0 || !cfg.contains(key)) return;
  try {
    var = cfg.at(key).get<T>();
  } catch (const json::exception& e) {
    throw qps::ValidationError("config key '" + key + "': " + e.what());
  }
}

qps::Circuit load_circuit(const std::string& file, const std::string& bench) {
  if (!file.empty() && !bench.empty()) throw CLI::ValidationError("give either --circuit or --bench, not both");
  if (!bench.empty()) {
    const auto spec = qps::parse_benchmark_name(bench);
    if (!spec) throw qps::ValidationError("unknown benchmark '" + bench + "'");
    return qps::gen_benchmark(*spec);
  }
  if (file.empty()) throw CLI::ValidationError("one of --circuit or --bench is required");
  return qps::read_qasm_file(file);
}

qps::NoiseParams load_noise(const std::string& path, const qps::DeviceModel& d) {
  return path.empty() ? qps::NoiseParams::from_device(d) : qps::load_noise_params(path, d);
}

qps::PipelineConfig load_pipeline(const std::string& path) {
  return path.empty() ? qps::PipelineConfig{} : qps::parse_pipeline_config(read_text(path));
}

template <class T>
T stage(std::optional<T> v, const std::string& what, const std::string& name) {
  if (!v) throw CLI::ValidationError("unknown " + what + " '" + name + "'");
  return *v;
}

// Shared by select and bench.
struct SelectArgs {
  std::string device, noise, pipeline;
  std::string method = "optran";
  int k = 1;
  std::uint64_t shots_per_peak = 200;
  std::uint64_t shots = 8192;
  bool no_shot_reduction = false;
  bool oracle = false;
  int epoch = 0;
  std::uint64_t seed = 0;
  std::uint64_t peaks = 0;
  int trajectories = qps::ExecuteOptions{}.trajectories;

  void add(CLI::App* app) {
    app->add_option("--device", device, "Device model JSON");
    app->add_option("--noise", noise, "Noise parameters JSON (default: the device's true rates)");
    app->add_option("--pipeline", pipeline, "Pipeline heuristics JSON");
    app->add_option("--method", method, "optran or optran-e")->check(CLI::IsMember({"optran", "optran-e"}));
    app->add_option("--k", k, "Survivors kept by optran-e")->check(CLI::PositiveNumber);
    app->add_option("--shots-per-peak", shots_per_peak)->check(CLI::PositiveNumber);
    app->add_option("--shots", shots, "Shots per run without shot reduction")->check(CLI::PositiveNumber);
    app->add_flag("--no-shot-reduction", no_shot_reduction);
    app->add_flag("--oracle", oracle, "Also search with the original circuits");
    app->add_option("--epoch", epoch)->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed);
    app->add_option("--peaks", peaks, "Peak count of the original when it is too wide to simulate");
    app->add_option("--trajectories", trajectories)->check(CLI::PositiveNumber);
  }

  void merge(const json& cfg, const CLI::App* app) {
    from_config(cfg, app, "device", device);
    from_config(cfg, app, "noise", noise);
    from_config(cfg, app, "pipeline", pipeline);
    from_config(cfg, app, "method", method);
    from_config(cfg, app, "k", k);
    from_config(cfg, app, "shots-per-peak", shots_per_peak);
    from_config(cfg, app, "shots", shots);
    from_config(cfg, app, "no-shot-reduction", no_shot_reduction);
    from_config(cfg, app, "oracle", oracle);
    from_config(cfg, app, "epoch", epoch);
    from_config(cfg, app, "seed", seed);
    from_config(cfg, app, "peaks", peaks);
    from_config(cfg, app, "trajectories", trajectories);
    if (device.empty()) throw CLI::ValidationError("--device is required");
    if (method != "optran" && method != "optran-e") throw CLI::ValidationError("unknown method '" + method + "'");
  }

  qps::SelectOptions options() const {
    qps::SelectOptions o;
    o.shot_reduction = !no_shot_reduction;
    o.shots_per_peak = shots_per_peak;
    o.shots = shots;
    o.seed = seed;
    o.epoch = epoch;
    o.pipeline = load_pipeline(pipeline);
    o.exec.trajectories = trajectories;
    if (peaks > 0) o.target_peaks = peaks;
    return o;
  }
};

qps::SelectionReport run_select(const qps::Circuit& c, const qps::DeviceModel& d, const qps::NoiseParams& np,
                                const SelectArgs& a, const qps::SelectOptions& o) {
  qps::SelectionReport r = a.method == "optran" ? qps::optran(c, d, np, qps::SearchSpace{}, o)
                                                : qps::optran_e(c, d, np, qps::SearchSpace{}, a.k, o);
  if (a.oracle) {
    if (c.num_qubits() > o.exec.max_statevector_qubits)
      throw qps::ValidationError("--oracle needs a circuit of at most " +
                                 std::to_string(o.exec.max_statevector_qubits) + " qubits");
    qps::attach_oracle(r, qps::oracle_search(c, d, np, qps::SearchSpace{}, o));
  }
  return r;
}

int cmd_transpile(const std::string& config, const std::string& circuit, const std::string& bench, std::string device,
                  std::string mapper, std::string router, std::string scheduler, bool trios, bool dd,
                  std::uint64_t seed, std::string pipeline, std::string out, const CLI::App* app) {
  const json cfg = load_config(config);
  from_config(cfg, app, "device", device);
  from_config(cfg, app, "mapper", mapper);
  from_config(cfg, app, "router", router);
  from_config(cfg, app, "scheduler", scheduler);
  from_config(cfg, app, "trios", trios);
  from_config(cfg, app, "dd", dd);
  from_config(cfg, app, "seed", seed);
  from_config(cfg, app, "pipeline", pipeline);
  from_config(cfg, app, "out", out);
  if (device.empty()) throw CLI::ValidationError("--device is required");
  qps::PassCombination p;
  p.mapper = stage(qps::mapper_from_name(mapper), "mapper", mapper);
  p.router = stage(qps::router_from_name(router), "router", router);
  p.scheduler = stage(qps::scheduler_from_name(scheduler), "scheduler", scheduler);
  p.trios = trios;
  p.dd = dd;
  const qps::Circuit c = load_circuit(circuit, bench);
  const qps::DeviceModel d = qps::load_device_model(device);
  const qps::Circuit t = qps::run_pipeline(c, d, p, seed, load_pipeline(pipeline));
  const std::string text = qps::emit_qasm(t);
  if (out.empty())
    std::cout << text;
  else
    write_atomic(out, text);
  const qps::CircuitStats s = qps::circuit_stats(t);
  (out.empty() ? std::cerr : std::cout) << "combination " << p.label() << "\ndepth " << s.depth << "\ngates "
                                        << s.total_gates << "\ncx " << s.cx_count << "\nduration " << qps::makespan(t)
                                        << "\n";
  return kOk;
}

int cmd_select(const std::string& config, const std::string& circuit, const std::string& bench, SelectArgs a,
               std::string out, const CLI::App* app) {
  const json cfg = load_config(config);
  a.merge(cfg, app);
  from_config(cfg, app, "out", out);
  if (out.empty()) throw CLI::ValidationError("--out is required");
  const qps::Circuit c = load_circuit(circuit, bench);
  const qps::DeviceModel d = qps::load_device_model(a.device);
  const qps::NoiseParams np = load_noise(a.noise, d);
  const qps::SelectionReport r = run_select(c, d, np, a, a.options());
  write_atomic(out + ".json", qps::report_to_json(r));
  write_atomic(out + ".csv", qps::report_to_csv(r));
  std::cout << "chosen " << (r.chosen ? r.chosen->label() : std::string("none")) << "\nevaluated " << r.evaluated()
            << "\ndummy_shots " << r.total_dummy_shots << "\nchosen_dummy_pst " << r.chosen_dummy_pst << "\n";
  if (r.final_pst) std::cout << "final_pst " << *r.final_pst << "\n";
  if (r.oracle)
    for (const auto& m : r.oracle->modes) std::cout << "relative_fidelity." << m.mode << " " << m.relative.value << "\n";
  return r.chosen ? kOk : kInput;
}

struct SuiteEntry {
  qps::BenchmarkSpec spec;
  std::string name;
  std::uint64_t peaks = 0;
};

std::vector<SuiteEntry> load_suite(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw qps::ValidationError("suite '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.contains("benchmarks") || !j["benchmarks"].is_array() || j["benchmarks"].empty())
    throw qps::ValidationError("suite needs a nonempty 'benchmarks' array");
  std::vector<SuiteEntry> out;
  for (const auto& b : j["benchmarks"]) {
    SuiteEntry e;
    e.name = b.is_string() ? b.get<std::string>() : b.value("name", std::string());
    if (b.is_object()) e.peaks = b.value("peaks", std::uint64_t{0});
    const auto spec = qps::parse_benchmark_name(e.name);
    if (!spec) throw qps::ValidationError("unknown benchmark '" + e.name + "' in suite");
    e.spec = *spec;
    out.push_back(std::move(e));
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int cmd_bench(const std::string& config, std::string suite, SelectArgs a, std::string out_dir, const CLI::App* app) {
  const json cfg = load_config(config);
  a.merge(cfg, app);
  from_config(cfg, app, "suite", suite);
  from_config(cfg, app, "out-dir", out_dir);
  if (suite.empty() || out_dir.empty()) throw CLI::ValidationError("--suite and --out-dir are required");
  const auto entries = load_suite(suite);
  const qps::DeviceModel d = qps::load_device_model(a.device);
  const qps::NoiseParams np = load_noise(a.noise, d);
  const qps::SelectOptions base = a.options();
  const std::vector<std::string> modes{"optran", "optran_e1", "optran_e3", "esp", "noise_model", "default"};

  std::ostringstream csv;
  csv << "benchmark,qubits,status";
  for (const auto& m : modes) csv << ',' << m;
  csv << ",optran_combo\n";
  std::vector<double> sums(modes.size(), 0.0);
  int ok = 0, failed = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const SuiteEntry& e = entries[i];
    qps::SelectOptions o = base;
    o.seed = qps::derive_seed(base.seed, i);
    if (e.peaks > 0) o.target_peaks = e.peaks;
    csv << e.name << ',' << e.spec.qubits << ',';
    try {
      const qps::Circuit c = qps::gen_benchmark(e.spec);
      const bool oracle = c.num_qubits() <= o.exec.max_statevector_qubits;
      if (!oracle && !o.target_peaks) throw qps::ValidationError("too wide to simulate and no peak count given");
      qps::SelectionReport r = qps::optran(c, d, np, qps::SearchSpace{}, o);
      if (!oracle) {
        write_atomic(fs::path(out_dir) / (e.name + ".json"), qps::report_to_json(r, false));
        csv << "oracle-unavailable";
        for (std::size_t m = 0; m < modes.size(); ++m) csv << ',';
        csv << ',' << (r.chosen ? r.chosen->label() : "") << '\n';
        continue;
      }
      const qps::OracleResult orc = qps::oracle_search(c, d, np, qps::SearchSpace{}, o);
      qps::attach_oracle(r, orc);
      auto relative = [&](const qps::PassCombination& p) {
        return qps::fidelity_relative_to_oracle(orc.pst_of(p), orc.best_pst).value;
      };
      const auto& m = r.oracle->modes;  // optran, esp, noise_model, default
      const qps::SelectionReport e1 = qps::optran_e(c, d, np, qps::SearchSpace{}, 1, o);
      const qps::SelectionReport e3 = qps::optran_e(c, d, np, qps::SearchSpace{}, 3, o);
      const std::vector<double> row{m[0].relative.value,   relative(*e1.chosen),  relative(*e3.chosen),
                                    m[1].relative.value,   m[2].relative.value,   m[3].relative.value};
      write_atomic(fs::path(out_dir) / (e.name + ".json"), qps::report_to_json(r, false));
      csv << "ok";
      for (std::size_t m = 0; m < row.size(); ++m) {
        csv << ',' << fmt(row[m]);
        sums[m] += row[m];
      }
      csv << ',' << r.chosen->label() << '\n';
      ++ok;
    } catch (const qps::Error& err) {
      std::cerr << "warning: " << e.name << ": " << err.what() << "\n";
      csv << "error";
      for (std::size_t m = 0; m < modes.size(); ++m) csv << ',';
      csv << ",\n";
      ++failed;
    }
  }
  csv << "mean,," << ok;
  for (double s : sums) csv << ',' << (ok > 0 ? fmt(s / ok) : "");
  csv << ",\n";
  write_atomic(fs::path(out_dir) / "summary.csv", csv.str());
  std::cout << csv.str();
  return failed == static_cast<int>(entries.size()) ? kInput : kOk;
}

int cmd_gen_bench(const std::string& name, const std::string& out) {
  const auto spec = qps::parse_benchmark_name(name);
  if (!spec) throw qps::ValidationError("unknown benchmark '" + name + "'");
  const std::string text = qps::emit_qasm(qps::gen_benchmark(*spec));
  if (out.empty())
    std::cout << text;
  else
    write_atomic(out, text);
  return kOk;
}

int cmd_gen_scenario(const std::string& device, const qps::ScenarioConfig& sc, const std::string& out) {
  const qps::DeviceModel d = qps::load_device_model(device);
  const std::string text = qps::noise_params_to_json(qps::make_scenario(d, sc)) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_atomic(out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Per-circuit transpiler pass selection with Clifford dummy circuits"};
  app.require_subcommand(1);
  std::string config;

  auto* tr = app.add_subcommand("transpile", "Run one pass combination");
  std::string circuit, bench, device, mapper = "sabre", router = "sabre", scheduler = "alap", pipeline, out;
  bool trios = false, dd = false;
  std::uint64_t seed = 0;
  tr->add_option("--config", config, "JSON config; flags override it");
  tr->add_option("--circuit", circuit, "OpenQASM 2 input");
  tr->add_option("--bench", bench, "Generated benchmark, e.g. ghz12");
  tr->add_option("--device", device, "Device model JSON");
  tr->add_option("--mapper", mapper);
  tr->add_option("--router", router);
  tr->add_option("--scheduler", scheduler);
  tr->add_flag("--trios", trios);
  tr->add_flag("--dd", dd);
  tr->add_option("--seed", seed);
  tr->add_option("--pipeline", pipeline, "Pipeline heuristics JSON");
  tr->add_option("--out", out, "Output QASM file (default: stdout)");

  auto* sel = app.add_subcommand("select", "Pick a pass combination with Clifford dummies");
  SelectArgs sel_args;
  std::string sel_out;
  sel->add_option("--config", config, "JSON config; flags override it");
  sel->add_option("--circuit", circuit, "OpenQASM 2 input");
  sel->add_option("--bench", bench, "Generated benchmark, e.g. ghz12");
  sel_args.add(sel);
  sel->add_option("--out", sel_out, "Report path prefix; writes <out>.json and <out>.csv");

  auto* bn = app.add_subcommand("bench", "Evaluate every selection mode over a suite");
  SelectArgs bn_args;
  std::string suite, out_dir;
  bn->add_option("--config", config, "JSON config; flags override it");
  bn->add_option("--suite", suite, "Suite JSON listing benchmarks");
  bn_args.add(bn);
  bn->add_option("--out-dir", out_dir, "Directory for summary.csv and per-benchmark reports");

  auto* gen = app.add_subcommand("gen", "Generate inputs");
  gen->require_subcommand(1);
  auto* gb = gen->add_subcommand("bench", "Emit a benchmark circuit as QASM");
  std::string gen_name, gen_out;
  gb->add_option("name", gen_name, "e.g. bv5, ghz12, cnxdirty7")->required();
  gb->add_option("--out", gen_out);
  auto* gs = gen->add_subcommand("scenario", "Emit a biased noise scenario");
  qps::ScenarioConfig sc;
  std::string gs_device;
  gs->add_option("--device", gs_device)->required();
  gs->add_option("--poison", sc.poison_factor, "Error multiplier on the best calibrated edge");
  gs->add_option("--drift", sc.drift, "Gate error multiplier");
  gs->add_option("--jitter", sc.jitter, "Log-uniform spread of true rates around calibration");
  gs->add_option("--seed", sc.seed);
  gs->add_option("--out", gen_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (tr->parsed())
      return cmd_transpile(config, circuit, bench, device, mapper, router, scheduler, trios, dd, seed, pipeline, out,
                           tr);
    if (sel->parsed()) return cmd_select(config, circuit, bench, sel_args, sel_out, sel);
    if (bn->parsed()) return cmd_bench(config, suite, bn_args, out_dir, bn);
    if (gb->parsed()) return cmd_gen_bench(gen_name, gen_out);
    if (gs->parsed()) return cmd_gen_scenario(gs_device, sc, gen_out);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
