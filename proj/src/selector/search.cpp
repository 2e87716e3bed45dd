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

#include "qps/selector/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>

#include "qps/clifford/simulate.hpp"
#include "qps/error.hpp"
#include "qps/passes/pipeline.hpp"
#include "qps/util/random.hpp"

namespace qps {

SearchSpace SearchSpace::mrs_only() {
  SearchSpace s;
  s.trios = {false};
  s.dd = {false};
  return s;
}

std::size_t SearchSpace::size() const {
  return mappers.size() * routers.size() * schedulers.size() * trios.size() * dd.size();
}

void SearchSpace::check() const {
  if (mappers.empty() || routers.empty() || schedulers.empty() || trios.empty() || dd.empty()) {
    throw ValidationError("every search stage needs at least one option");
  }
  if (std::accumulate(chunking.begin(), chunking.end(), 0) != 5) {
    throw ValidationError("chunk sizes must add up to the 5 pipeline stages");
  }
  if (std::any_of(chunking.begin(), chunking.end(), [](int m) { return m < 1; })) {
    throw ValidationError("chunk sizes must be positive");
  }
  if (k < 1) throw ValidationError("k must be at least 1");
}

std::vector<PassCombination> enumerate_combinations(const SearchSpace& space) {
  std::vector<PassCombination> out;
  out.reserve(space.size());
  for (Mapper m : space.mappers)
    for (Router r : space.routers)
      for (Scheduler s : space.schedulers)
        for (bool t : space.trios)
          for (bool dd : space.dd) out.push_back({m, r, s, t, dd});
  return out;
}

std::optional<std::size_t> combination_index(const SearchSpace& space, const PassCombination& p) {
  auto pos = [](const auto& v, const auto& x) -> std::optional<std::size_t> {
    const auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  };
  const auto m = pos(space.mappers, p.mapper);
  const auto r = pos(space.routers, p.router);
  const auto s = pos(space.schedulers, p.scheduler);
  const auto t = pos(space.trios, p.trios);
  const auto dd = pos(space.dd, p.dd);
  if (!m || !r || !s || !t || !dd) return std::nullopt;
  return (((*m * space.routers.size() + *r) * space.schedulers.size() + *s) * space.trios.size() + *t) *
             space.dd.size() +
         *dd;
}

double pst(const Counts& counts, const Distribution& ideal) {
  const std::uint64_t total = total_shots(counts);
  if (total == 0) throw ValidationError("PST of an empty histogram");
  std::uint64_t hits = 0;
  for (const auto& [key, n] : counts) {
    if (static_cast<int>(key.size()) != ideal.width()) throw ValidationError("histogram and ideal widths differ");
    if (ideal.probability(key) >= 1e-6) hits += n;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

std::uint64_t shot_budget(const Distribution& ideal_dummy, std::uint64_t shots_per_peak) {
  return shots_per_peak * static_cast<std::uint64_t>(count_peaks(ideal_dummy));
}

double correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3) throw ValidationError("correlation needs two equal series of length >= 3");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx <= 0 || syy <= 0) throw ValidationError("correlation of a constant series is undefined");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

RelativeFidelity fidelity_relative_to_oracle(double m_pst, double oracle_pst) {
  if (!(oracle_pst > 0)) throw ValidationError("oracle fidelity must be positive");
  const double raw = m_pst / oracle_pst;
  return {std::min(raw, 1.0), raw};
}

std::uint64_t combo_seed(std::uint64_t seed, std::size_t index) { return derive_seed(seed, index); }

const ComboRecord* SelectionReport::best(int chunk) const {
  const ComboRecord* out = nullptr;
  for (const auto& r : records) {
    if (r.failed || (chunk != 0 && r.chunk != chunk)) continue;
    if (!out || r.dummy_pst > out->dummy_pst || (r.dummy_pst == out->dummy_pst && r.index < out->index)) out = &r;
  }
  return out;
}

double OracleResult::pst_of(const PassCombination& p) const {
  for (const auto& e : table) {
    if (e.combo != p) continue;
    if (e.failed) throw ValidationError("combination " + p.label() + " failed in the oracle sweep");
    return e.pst;
  }
  throw ValidationError("combination " + p.label() + " is not in the oracle table");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Seed streams hanging off a combination's seed.
enum Stream : std::uint64_t { kCliffordize = 3, kDummyRun = 4, kNoiseModel = 5, kFinalRun = 6, kOracleRun = 7 };

struct Context {
  const Circuit& c;
  const DeviceModel& d;
  const NoiseParams& np;
  const SelectOptions& opts;
  std::uint64_t target_peaks = 0;
  std::optional<Distribution> ideal;
  Timings* timings = nullptr;
};

Context make_context(const Circuit& c, const DeviceModel& d, const NoiseParams& np, const SelectOptions& opts,
                     Timings* timings) {
  Context ctx{c, d, np, opts, 0, std::nullopt, nullptr};
  ctx.timings = timings;
  const auto t0 = Clock::now();
  const int width = static_cast<int>(active_qubits(c).size());
  if (width <= opts.exec.max_statevector_qubits) ctx.ideal = statevector_simulate(c, opts.exec.max_statevector_qubits);
  if (opts.target_peaks) {
    ctx.target_peaks = *opts.target_peaks;
  } else if (ctx.ideal) {
    ctx.target_peaks = static_cast<std::uint64_t>(count_peaks(*ctx.ideal));
  } else {
    throw SimulationError("circuit has " + std::to_string(width) +
                          " active qubits, too many to count ideal peaks; give the peak count explicitly");
  }
  timings->simulate_s += seconds_since(t0);
  return ctx;
}

ComboRecord evaluate(const Context& ctx, const PassCombination& combo, std::size_t index, int chunk) {
  ComboRecord rec;
  rec.combo = combo;
  rec.index = index;
  rec.chunk = chunk;
  rec.target_peaks = ctx.target_peaks;
  const std::uint64_t seed = combo_seed(ctx.opts.seed, index);
  Timings& tm = *ctx.timings;
  try {
    auto t0 = Clock::now();
    const Circuit t = run_pipeline(ctx.c, ctx.d, combo, seed, ctx.opts.pipeline);
    tm.transpile_s += seconds_since(t0);

    t0 = Clock::now();
    CliffordizeConfig cc;
    cc.delta = ctx.opts.delta;
    cc.max_attempts = ctx.opts.max_attempts;
    cc.seed = derive_seed(seed, kCliffordize);
    const CliffordizeResult dummy = cliffordize(t, ctx.target_peaks, cc);
    tm.cliffordize_s += seconds_since(t0);
    rec.stats = circuit_stats(dummy.circuit);
    rec.attempts = dummy.attempts;

    t0 = Clock::now();
    const AffineSupport support = stabilizer_support(dummy.circuit);
    tm.simulate_s += seconds_since(t0);
    rec.peaks = support.size();
    rec.shots = ctx.opts.shot_reduction ? ctx.opts.shots_per_peak * rec.peaks : ctx.opts.shots;

    t0 = Clock::now();
    const Counts counts = execute(dummy.circuit, ctx.d, ctx.np, rec.shots, derive_seed(seed, kDummyRun),
                                  ctx.opts.epoch, ctx.opts.exec);
    std::uint64_t hits = 0;
    for (const auto& [key, n] : counts)
      if (support.contains(key)) hits += n;
    rec.dummy_pst = rec.shots ? static_cast<double>(hits) / static_cast<double>(rec.shots) : 0.0;
    tm.execute_s += seconds_since(t0);

    t0 = Clock::now();
    rec.esp = esp_predict(t, ctx.d);
    if (ctx.opts.noise_model_baseline && ctx.ideal) {
      rec.noise_model_pst =
          pst(noise_model_predict(t, ctx.d, ctx.opts.shots, derive_seed(seed, kNoiseModel), ctx.opts.exec), *ctx.ideal);
    }
    tm.baselines_s += seconds_since(t0);
  } catch (const Error& e) {
    rec.failed = true;
    rec.error = e.what();
  }
  return rec;
}

std::vector<std::string> ranking(const std::vector<ComboRecord>& records,
                                 const std::optional<double> ComboRecord::*field) {
  std::vector<const ComboRecord*> rs;
  std::map<std::size_t, bool> seen;
  for (const auto& r : records) {
    if (r.failed || !(r.*field) || seen[r.index]) continue;
    seen[r.index] = true;
    rs.push_back(&r);
  }
  std::stable_sort(rs.begin(), rs.end(), [field](const ComboRecord* a, const ComboRecord* b) {
    if (*(a->*field) != *(b->*field)) return *(a->*field) > *(b->*field);
    return a->index < b->index;
  });
  std::vector<std::string> out;
  for (const auto* r : rs) out.push_back(r->combo.label());
  return out;
}

void finish(SelectionReport& report, const Context& ctx, int chunk) {
  const ComboRecord* best = report.best(chunk);
  if (!best) throw SimulationError("every pass combination failed");
  report.chosen = best->combo;
  report.chosen_dummy_pst = best->dummy_pst;
  for (const auto& r : report.records) report.total_dummy_shots += r.shots;
  report.esp_ranking = ranking(report.records, &ComboRecord::esp);
  report.noise_model_ranking = ranking(report.records, &ComboRecord::noise_model_pst);
  if (ctx.opts.final_run && ctx.ideal) {
    const auto t0 = Clock::now();
    const std::uint64_t seed = combo_seed(ctx.opts.seed, best->index);
    const Circuit t = run_pipeline(ctx.c, ctx.d, best->combo, seed, ctx.opts.pipeline);
    report.final_pst =
        pst(execute(t, ctx.d, ctx.np, ctx.opts.shots, derive_seed(seed, kFinalRun), ctx.opts.epoch, ctx.opts.exec),
            *ctx.ideal);
    report.timings.execute_s += seconds_since(t0);
  }
}

SelectionReport new_report(const std::string& method, const SelectOptions& opts) {
  SelectionReport r;
  r.method = method;
  r.seed = opts.seed;
  r.epoch = opts.epoch;
  r.shot_reduction = opts.shot_reduction;
  r.baseline_shots = opts.shots;
  return r;
}

}  // namespace

SelectionReport optran(const Circuit& c, const DeviceModel& d, const NoiseParams& np, const SearchSpace& space,
                       const SelectOptions& opts) {
  space.check();
  const auto t0 = Clock::now();
  SelectionReport report = new_report("optran", opts);
  const Context ctx = make_context(c, d, np, opts, &report.timings);
  const auto combos = enumerate_combinations(space);
  for (std::size_t i = 0; i < combos.size(); ++i) report.records.push_back(evaluate(ctx, combos[i], i, 1));
  finish(report, ctx, 0);
  report.timings.total_s = seconds_since(t0);
  return report;
}

SelectionReport optran_e(const Circuit& c, const DeviceModel& d, const NoiseParams& np, const SearchSpace& space,
                         int k, const SelectOptions& opts) {
  space.check();
  if (space.chunking != std::vector<int>{3, 2}) {
    throw ValidationError("chunked search needs chunks [3, 2] over mapper/router/scheduler and trios/dd");
  }
  if (k < 1) throw ValidationError("k must be at least 1");
  const PassCombination plain_probe{space.mappers.front(), space.routers.front(), space.schedulers.front(), false, false};
  if (!combination_index(space, plain_probe)) throw ValidationError("chunked search needs trios and dd off in the space");

  const auto t0 = Clock::now();
  SelectionReport report = new_report("optran-e", opts);
  report.k = k;
  const Context ctx = make_context(c, d, np, opts, &report.timings);

  std::map<std::size_t, ComboRecord> done;
  auto run = [&](const PassCombination& p, int chunk) {
    const std::size_t idx = *combination_index(space, p);
    auto it = done.find(idx);
    if (it == done.end()) it = done.emplace(idx, evaluate(ctx, p, idx, chunk)).first;
    ComboRecord rec = it->second;
    rec.chunk = chunk;
    report.records.push_back(rec);
  };

  for (Mapper m : space.mappers)
    for (Router r : space.routers)
      for (Scheduler s : space.schedulers) run({m, r, s, false, false}, 1);

  std::vector<const ComboRecord*> first;
  for (const auto& r : report.records)
    if (!r.failed) first.push_back(&r);
  std::stable_sort(first.begin(), first.end(), [](const ComboRecord* a, const ComboRecord* b) {
    if (a->dummy_pst != b->dummy_pst) return a->dummy_pst > b->dummy_pst;
    return a->index < b->index;
  });
  if (first.empty()) throw SimulationError("every pass combination failed");
  std::vector<PassCombination> survivors;
  for (std::size_t i = 0; i < first.size() && i < static_cast<std::size_t>(k); ++i) survivors.push_back(first[i]->combo);

  for (const PassCombination& base : survivors)
    for (bool t : space.trios)
      for (bool dd : space.dd) run({base.mapper, base.router, base.scheduler, t, dd}, 2);

  finish(report, ctx, 2);
  report.timings.total_s = seconds_since(t0);
  return report;
}

OracleResult oracle_search(const Circuit& c, const DeviceModel& d, const NoiseParams& np, const SearchSpace& space,
                           const SelectOptions& opts) {
  space.check();
  const int width = static_cast<int>(active_qubits(c).size());
  if (width > opts.exec.max_statevector_qubits) {
    throw SimulationError("circuit has " + std::to_string(width) + " active qubits, too many for oracle mode");
  }
  const Distribution ideal = statevector_simulate(c, opts.exec.max_statevector_qubits);
  OracleResult out;
  bool any = false;
  const auto combos = enumerate_combinations(space);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    OracleEntry e{combos[i], i, false, 0.0};
    try {
      const std::uint64_t seed = combo_seed(opts.seed, i);
      const Circuit t = run_pipeline(c, d, combos[i], seed, opts.pipeline);
      e.pst = pst(execute(t, d, np, opts.shots, derive_seed(seed, kOracleRun), opts.epoch, opts.exec), ideal);
    } catch (const Error&) {
      e.failed = true;
    }
    if (!e.failed && (!any || e.pst > out.best_pst)) {
      any = true;
      out.best = e.combo;
      out.best_index = i;
      out.best_pst = e.pst;
    }
    out.table.push_back(e);
  }
  if (!any) throw SimulationError("every pass combination failed");
  return out;
}

std::vector<EspEntry> esp_rank(const Circuit& c, const DeviceModel& d, const SearchSpace& space, std::uint64_t seed,
                               const PipelineConfig& cfg) {
  std::vector<EspEntry> out;
  const auto combos = enumerate_combinations(space);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    try {
      out.push_back({combos[i], i, esp_predict(run_pipeline(c, d, combos[i], combo_seed(seed, i), cfg), d)});
    } catch (const Error&) {
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const EspEntry& a, const EspEntry& b) { return a.esp > b.esp; });
  return out;
}

void attach_oracle(SelectionReport& report, const OracleResult& oracle) {
  for (auto& r : report.records) {
    r.oracle_pst.reset();
    for (const auto& e : oracle.table)
      if (e.index == r.index && e.combo == r.combo && !e.failed) r.oracle_pst = e.pst;
  }
  OracleComparison cmp;
  cmp.best = oracle.best;
  cmp.best_pst = oracle.best_pst;
  auto add = [&](const std::string& mode, const PassCombination& p) {
    ModeResult m{mode, p, 0.0, {}};
    try {
      m.pst = oracle.pst_of(p);
    } catch (const ValidationError&) {
      return;
    }
    m.relative = fidelity_relative_to_oracle(m.pst, oracle.best_pst);
    cmp.modes.push_back(m);
  };
  if (report.chosen) add(report.method, *report.chosen);
  if (!report.esp_ranking.empty()) add("esp", *parse_combination(report.esp_ranking.front()));
  if (!report.noise_model_ranking.empty()) add("noise_model", *parse_combination(report.noise_model_ranking.front()));
  add("default", PassCombination{});
  report.oracle = std::move(cmp);
}

}  // namespace qps
