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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qps/clifford/cliffordize.hpp"
#include "qps/emulator/execute.hpp"
#include "qps/emulator/noise.hpp"
#include "qps/ir/analysis.hpp"
#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"
#include "qps/ir/distribution.hpp"
#include "qps/passes/combination.hpp"

namespace qps {

/// Option lists for the five pipeline stages (mapper, router, scheduler,
/// trios, dd), the chunk sizes over those stages and the number of
/// survivors carried between chunks.
struct SearchSpace {
  std::vector<Mapper> mappers{Mapper::Dense, Mapper::NoiseAdaptive, Mapper::Sabre};
  std::vector<Router> routers{Router::Basic, Router::Stochastic, Router::Sabre};
  std::vector<Scheduler> schedulers{Scheduler::Alap, Scheduler::Asap};
  std::vector<bool> trios{false, true};
  std::vector<bool> dd{false, true};
  std::vector<int> chunking{3, 2};
  int k = 1;

  /// Mapper, router and scheduler only, with both optimizations off.
  static SearchSpace mrs_only();
  std::size_t size() const;
  /// Throws ValidationError on an empty option list, chunk sizes that do
  /// not sum to 5, or k < 1.
  void check() const;
};

/// Lexicographic product of the stage options, mapper varying slowest.
std::vector<PassCombination> enumerate_combinations(const SearchSpace& space);

/// Position of `p` in enumerate_combinations(space); nullopt when absent.
std::optional<std::size_t> combination_index(const SearchSpace& space, const PassCombination& p);

/// Fraction of shots landing in the support of `ideal`. Throws
/// ValidationError on empty counts or a register-width mismatch.
double pst(const Counts& counts, const Distribution& ideal);

std::uint64_t shot_budget(const Distribution& ideal_dummy, std::uint64_t shots_per_peak = 200);

/// Pearson coefficient in [-1, 1]. Throws ValidationError for fewer than
/// three points, unequal lengths or zero variance.
double correlation(const std::vector<double>& xs, const std::vector<double>& ys);

struct RelativeFidelity {
  double value = 0;  ///< clamped to at most 1
  double raw = 0;
};

/// m / oracle, clamped at 1. Throws ValidationError for a nonpositive oracle.
RelativeFidelity fidelity_relative_to_oracle(double m_pst, double oracle_pst);

struct SelectOptions {
  bool shot_reduction = true;
  std::uint64_t shots_per_peak = 200;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  int epoch = 0;
  PipelineConfig pipeline;
  double delta = CliffordizeConfig{}.delta;
  int max_attempts = CliffordizeConfig{}.max_attempts;
  ExecuteOptions exec;
  /// Peak count of the original; computed by statevector when unset.
  std::optional<std::uint64_t> target_peaks;
  /// Per-combo stale noise-model prediction on the transpiled original.
  bool noise_model_baseline = true;
  /// Run the chosen variant once at `shots` against the original's ideal.
  bool final_run = true;
};

/// One evaluated combination.
struct ComboRecord {
  PassCombination combo;
  /// Index in the full enumeration; also selects the combo's seed stream.
  std::size_t index = 0;
  /// 1 or 2 for a chunked search, 1 otherwise.
  int chunk = 1;
  bool failed = false;
  std::string error;
  CircuitStats stats;
  std::uint64_t target_peaks = 0;
  std::uint64_t peaks = 0;
  int attempts = 0;
  std::uint64_t shots = 0;
  double dummy_pst = 0;
  std::optional<double> esp;
  std::optional<double> noise_model_pst;
  std::optional<double> oracle_pst;
};

struct ModeResult {
  std::string mode;
  PassCombination combo;
  double pst = 0;
  RelativeFidelity relative;
};

struct OracleComparison {
  PassCombination best;
  double best_pst = 0;
  std::vector<ModeResult> modes;
};

struct Timings {
  double transpile_s = 0;
  double cliffordize_s = 0;
  double simulate_s = 0;
  double execute_s = 0;
  double baselines_s = 0;
  double total_s = 0;
};

struct SelectionReport {
  std::string method;
  int k = 0;
  std::uint64_t seed = 0;
  int epoch = 0;
  bool shot_reduction = true;
  std::uint64_t baseline_shots = 8192;
  std::vector<ComboRecord> records;
  std::optional<PassCombination> chosen;
  double chosen_dummy_pst = 0;
  std::uint64_t total_dummy_shots = 0;
  std::optional<double> final_pst;
  /// Labels by descending prediction, ties by index; failed combos omitted.
  std::vector<std::string> esp_ranking;
  std::vector<std::string> noise_model_ranking;
  std::optional<OracleComparison> oracle;
  Timings timings;

  std::size_t evaluated() const { return records.size(); }
  /// Best record by dummy PST (ties: lowest index) among the given chunk,
  /// 0 meaning any.
  const ComboRecord* best(int chunk = 0) const;
};

/// Transpiles under every combination, scores each Clifford dummy on the
/// emulator and picks the highest dummy PST, ties to the lowest index.
/// Failed pipelines are recorded and skipped. Throws SimulationError when no
/// combination succeeds.
SelectionReport optran(const Circuit& c, const DeviceModel& d, const NoiseParams& np, const SearchSpace& space,
                       const SelectOptions& opts);

/// Chunked variant: the mapper/router/scheduler product with optimizations
/// off, then every trios/dd setting for the k best survivors.
SelectionReport optran_e(const Circuit& c, const DeviceModel& d, const NoiseParams& np, const SearchSpace& space,
                         int k, const SelectOptions& opts);

struct OracleEntry {
  PassCombination combo;
  std::size_t index = 0;
  bool failed = false;
  double pst = 0;
};

struct OracleResult {
  PassCombination best;
  std::size_t best_index = 0;
  double best_pst = 0;
  std::vector<OracleEntry> table;

  /// PST of `p` in the table; throws ValidationError when absent or failed.
  double pst_of(const PassCombination& p) const;
};

/// Executes the transpiled original under every combination against the
/// statevector ideal. Throws SimulationError when the original exceeds the
/// statevector cap or no combination succeeds.
OracleResult oracle_search(const Circuit& c, const DeviceModel& d, const NoiseParams& np, const SearchSpace& space,
                           const SelectOptions& opts);

struct EspEntry {
  PassCombination combo;
  std::size_t index = 0;
  double esp = 0;
};

/// Combinations by descending ESP of their transpiled variant, ties by
/// index; failed pipelines are dropped.
std::vector<EspEntry> esp_rank(const Circuit& c, const DeviceModel& d, const SearchSpace& space, std::uint64_t seed,
                               const PipelineConfig& cfg = {});

/// Fills report.oracle and each record's oracle_pst. Modes: optran (the
/// report's pick), esp, noise_model (when baselines were computed) and
/// default (sabre-sabre-alap-0-0).
void attach_oracle(SelectionReport& report, const OracleResult& oracle);

/// Pipeline seed of the combination at `index` under master seed `seed`.
std::uint64_t combo_seed(std::uint64_t seed, std::size_t index);

inline constexpr int kReportSchemaVersion = 1;

/// JSON with a schema_version field; timings sit in their own object.
std::string report_to_json(const SelectionReport& r, bool include_timings = true);
/// One row per record with a fixed header.
std::string report_to_csv(const SelectionReport& r);

}  // namespace qps
