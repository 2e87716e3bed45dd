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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "qps/bench/generators.hpp"
#include "qps/error.hpp"
#include "qps/ir/analysis.hpp"
#include "qps/ir/device.hpp"
#include "qps/passes/fusion.hpp"
#include "qps/passes/mapping.hpp"
#include "qps/passes/pipeline.hpp"
#include "qps/passes/routing.hpp"
#include "qps/passes/schedule.hpp"
#include "qps/linalg/statevector.hpp"

namespace qps {
namespace {

constexpr double kPi = std::numbers::pi;

DeviceModel make_device(int n, const std::vector<Edge>& edges, const std::vector<double>& cx,
                        const std::vector<double>& readout) {
  DeviceModel::Spec s;
  s.num_qubits = n;
  s.coupling = edges;
  for (std::size_t i = 0; i < edges.size(); ++i) s.calibration.cx_error[edge_key(edges[i].first, edges[i].second)] = cx[i];
  s.calibration.readout_error = readout;
  s.t1.assign(n, 1e6);
  s.t2.assign(n, 1e6);
  return DeviceModel(std::move(s));
}

const DeviceModel& heavy_hex() {
  static const DeviceModel d = load_device_model(QPS_DATA_DIR "/devices/heavy_hex_27.json");
  return d;
}

std::vector<Instruction> gates_of(const Circuit& c) {
  std::vector<Instruction> out;
  for (auto ins : c.instructions()) {
    ins.start.reset();
    out.push_back(ins);
  }
  return out;
}

Circuit random_circuit(int n, int gates, std::mt19937_64& rng, bool measure = true) {
  Circuit c(n, n);
  for (int g = 0; g < gates; ++g) {
    const int kind = static_cast<int>(rng() % 5);
    std::vector<int> qs(n);
    std::iota(qs.begin(), qs.end(), 0);
    std::shuffle(qs.begin(), qs.end(), rng);
    switch (kind) {
      case 0: c.h(qs[0]); break;
      case 1: c.rz(qs[0], std::uniform_real_distribution<double>(0, 2 * kPi)(rng)); break;
      case 2: c.sx(qs[0]); break;
      default: c.cx(qs[0], qs[1]); break;
    }
  }
  if (measure) c.measure_all();
  return c;
}

// ---- fusion ----

TEST(Fusion, HzhBecomesX) {
  Circuit c(1, 0);
  c.h(0).z(0).h(0);
  const Circuit f = fuse_single_qubit(c);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.instructions()[0].gate, Gate::X);
}

TEST(Fusion, IdentityRunVanishes) {
  Circuit c(1, 0);
  c.s(0).s(0).z(0).id(0);
  EXPECT_TRUE(fuse_single_qubit(c).empty());
}

TEST(Fusion, RandomRunsKeepUnitaryAndNeverGrow) {
  std::mt19937_64 rng(5);
  const std::vector<Gate> kinds{Gate::I, Gate::X, Gate::SX, Gate::H, Gate::S, Gate::Z, Gate::RZ};
  for (int trial = 0; trial < 300; ++trial) {
    Circuit c(2, 0);
    const int len = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) {
      const Gate g = kinds[rng() % kinds.size()];
      if (g == Gate::RZ) {
        c.rz(0, std::uniform_real_distribution<double>(0, 2 * kPi)(rng));
      } else {
        c.append(make_gate(g, {0}));
      }
      if (rng() % 4 == 0) c.cx(0, 1);
    }
    const Circuit f = fuse_single_qubit(c);
    auto count1q = [](const Circuit& x) {
      return std::count_if(x.instructions().begin(), x.instructions().end(),
                           [](const Instruction& i) { return is_single_qubit_unitary(i.gate); });
    };
    EXPECT_LE(count1q(f), count1q(c));
    EXPECT_LT(phase_insensitive_distance(circuit_unitary(f), circuit_unitary(c)), 1e-9);
  }
}

TEST(Fusion, SynthesisCoversEveryShape) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
    const double b = std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
    const double t = std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
    Mat2<double> u = single_qubit_matrix(Gate::RZ, a) * single_qubit_matrix(Gate::SX) *
                     single_qubit_matrix(Gate::RZ, t) * single_qubit_matrix(Gate::SX) *
                     single_qubit_matrix(Gate::RZ, b);
    Circuit c(1, 0);
    for (const auto& ins : synthesize_1q(u, 0)) c.append(ins);
    EXPECT_LE(c.size(), 5u);
    EXPECT_LT(phase_insensitive_distance(circuit_unitary(c), u), 1e-9);
  }
  for (Gate g : {Gate::H, Gate::SX, Gate::X, Gate::S}) {
    Circuit c(1, 0);
    for (const auto& ins : synthesize_1q(single_qubit_matrix(g), 0)) c.append(ins);
    EXPECT_LE(c.size(), 3u);
    EXPECT_LT(phase_insensitive_distance(circuit_unitary(c), single_qubit_matrix(g)), 1e-9);
  }
}

// ---- mapping ----

TEST(Mapping, Trivial) {
  const DeviceModel& d = heavy_hex();
  EXPECT_EQ(map_trivial(Circuit(3, 0), d).virt_to_phys(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(map_trivial(Circuit(1, 0), d).virt_to_phys(), std::vector<int>{0});
  EXPECT_THROW(map_trivial(Circuit(28, 0), d), PassError);
}

TEST(Mapping, DenseOnTShape) {
  const DeviceModel d = make_device(4, {{0, 1}, {1, 2}, {1, 3}}, {0.01, 0.01, 0.01}, {0, 0, 0, 0});
  Circuit c(3, 0);
  c.cx(0, 1).cx(1, 2);
  const Layout l = map_dense(c, d);
  std::set<int> image(l.virt_to_phys().begin(), l.virt_to_phys().end());
  // Oracle: every 3-subset with the maximum number of internal edges.
  int best = -1;
  std::vector<std::set<int>> optimal;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int e = b + 1; e < 4; ++e) {
        const int links = d.coupled(a, b) + d.coupled(a, e) + d.coupled(b, e);
        if (links > best) {
          best = links;
          optimal.clear();
        }
        if (links == best) optimal.push_back({a, b, e});
      }
  EXPECT_NE(std::find(optimal.begin(), optimal.end(), image), optimal.end());
  EXPECT_TRUE(image.count(1));
  // The busiest virtual qubit sits on the centre.
  EXPECT_EQ(l.phys(1), 1);
}

TEST(Mapping, DenseWholeDevice) {
  const DeviceModel& d = heavy_hex();
  const Layout l = map_dense(Circuit(27, 0), d);
  std::set<int> image(l.virt_to_phys().begin(), l.virt_to_phys().end());
  EXPECT_EQ(image.size(), 27u);
}

TEST(Mapping, DenseTwoOnLine) {
  const DeviceModel d = DeviceModel::line(2);
  Circuit c(2, 0);
  c.cx(0, 1);
  const Layout l = map_dense(c, d);
  std::set<int> image(l.virt_to_phys().begin(), l.virt_to_phys().end());
  EXPECT_EQ(image, (std::set<int>{0, 1}));
  const DeviceModel line5 = DeviceModel::line(5);
  const Layout l5 = map_dense(c, line5);
  const std::set<int> image5(l5.virt_to_phys().begin(), l5.virt_to_phys().end());
  for (int p : image5) EXPECT_LE(p, 2);
  EXPECT_TRUE(line5.coupled(*image5.begin(), *image5.rbegin()));
}

TEST(Mapping, NoiseAdaptivePicksBestEdge) {
  const DeviceModel d = make_device(3, {{0, 1}, {1, 2}}, {0.05, 0.01}, {0.0, 0.0, 0.0});
  Circuit c(2, 0);
  c.cx(0, 1);
  const Layout l = map_noise_adaptive(c, d);
  // Oracle: enumerate placements, minimum error among coupled ones.
  double best = 1;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b && d.coupled(a, b)) best = std::min(best, d.cx_error(a, b));
  EXPECT_DOUBLE_EQ(d.cx_error(l.phys(0), l.phys(1)), best);
  EXPECT_EQ(edge_key(l.phys(0), l.phys(1)), (Edge{1, 2}));
}

TEST(Mapping, NoiseAdaptiveTieIsDeterministic) {
  const DeviceModel d = DeviceModel::line(4, 0.01, 0.01);
  Circuit c(2, 0);
  c.cx(0, 1);
  EXPECT_EQ(map_noise_adaptive(c, d).virt_to_phys(), (std::vector<int>{0, 1}));
}

TEST(Mapping, NoiseAdaptiveWithoutTwoQubitGates) {
  const std::vector<double> ro{0.04, 0.01, 0.03, 0.02, 0.05};
  const DeviceModel d = make_device(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {0.01, 0.01, 0.01, 0.01}, ro);
  Circuit c(3, 0);
  c.h(0).h(1).h(2);
  std::vector<int> order{0, 1, 2, 3, 4};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ro[a] < ro[b]; });
  EXPECT_EQ(map_noise_adaptive(c, d).virt_to_phys(), (std::vector<int>{order[0], order[1], order[2]}));
}

TEST(Mapping, SabreFindsZeroSwapLayout) {
  const DeviceModel& d = heavy_hex();
  Circuit c(5, 0);
  for (int i = 0; i < 4; ++i) c.cx(i, i + 1);
  c.cx(4, 3).cx(2, 1);
  int zero = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Layout l = map_sabre(c, d, seed);
    bool chain = true;
    for (int i = 0; i < 4; ++i) chain = chain && d.coupled(l.phys(i), l.phys(i + 1));
    // A layout embedding the chain needs no SWAPs, and vice versa.
    EXPECT_EQ(chain, count_swaps(route_sabre(c, l, d, 1)) == 0);
    zero += chain;
  }
  EXPECT_GE(zero, 1);
}

TEST(Mapping, SabreDeterministic) {
  const DeviceModel& d = heavy_hex();
  std::mt19937_64 rng(2);
  const Circuit c = random_circuit(7, 40, rng);
  EXPECT_EQ(map_sabre(c, d, 17).virt_to_phys(), map_sabre(c, d, 17).virt_to_phys());
}

TEST(Mapping, SabreSingleQubit) {
  const DeviceModel& d = heavy_hex();
  Circuit c(1, 1);
  c.h(0).measure(0, 0);
  const Layout l = map_sabre(c, d, 4);
  EXPECT_EQ(l.num_virtual(), 1);
  EXPECT_EQ(count_swaps(route_sabre(c, l, d, 4)), 0);
}

// ---- routing ----

bool all_coupled(const Circuit& c, const DeviceModel& d) {
  for (const auto& ins : c.instructions()) {
    if (ins.gate == Gate::CX || ins.gate == Gate::SWAP) {
      if (!d.coupled(ins.qubits[0], ins.qubits[1])) return false;
    }
  }
  return true;
}

TEST(Routing, BasicLineExample) {
  const DeviceModel d = DeviceModel::line(3);
  Circuit c(3, 0);
  c.cx(0, 2);
  const Circuit r = route_basic(c, Layout::identity(3, 3), d);
  const std::vector<Instruction> expect{make_gate(Gate::SWAP, {0, 1}), make_gate(Gate::CX, {1, 2}),
                                        make_gate(Gate::SWAP, {0, 1})};
  EXPECT_EQ(gates_of(r), expect);
  Circuit measured = c;
  measured = Circuit(3, 3);
  measured.h(0).cx(0, 2).measure_all();
  const Circuit rm = route_basic(measured, Layout::identity(3, 3), d);
  EXPECT_LT(oracle::max_deviation(oracle::distribution(rm), oracle::distribution(measured)), 1e-12);
}

TEST(Routing, BasicAdjacentIsNoop) {
  const DeviceModel d = DeviceModel::line(3);
  Circuit c(3, 0);
  c.h(0).cx(0, 1).cx(2, 1);
  EXPECT_EQ(gates_of(route_basic(c, Layout::identity(3, 3), d)), gates_of(c));
}

TEST(Routing, BasicRestoresPositions) {
  const DeviceModel d = DeviceModel::line(5);
  Circuit c(5, 0);
  c.cx(0, 4).cx(1, 3).cx(4, 0);
  const Circuit r = route_basic(c, Layout::identity(5, 5), d);
  // Every gather is undone before the next gate is routed, so the tracked
  // layout passes through the identity once per non-adjacent CX.
  Layout track = Layout::identity(5, 5);
  int restores = 0;
  for (const auto& ins : r.instructions()) {
    if (ins.gate != Gate::SWAP) continue;
    track.swap_physical(ins.qubits[0], ins.qubits[1]);
    restores += track == Layout::identity(5, 5);
  }
  EXPECT_EQ(restores, 3);
  EXPECT_EQ(*r.final_layout(), *r.initial_layout());
}

TEST(Routing, StochasticDeterministicAndEquivalent) {
  const DeviceModel d = DeviceModel::line(3);
  Circuit c(3, 3);
  c.h(0).cx(0, 2).rz(2, 0.4).h(2).measure_all();
  const Circuit a = route_stochastic(c, Layout::identity(3, 3), d, 11);
  const Circuit b = route_stochastic(c, Layout::identity(3, 3), d, 11);
  EXPECT_EQ(gates_of(a), gates_of(b));
  EXPECT_GE(count_swaps(a), 1);
  EXPECT_TRUE(all_coupled(a, d));
  EXPECT_LT(oracle::max_deviation(oracle::distribution(a), oracle::distribution(c)), 1e-12);
}

TEST(Routing, StochasticAdjacentNoSwaps) {
  const DeviceModel d = DeviceModel::line(4);
  Circuit c(4, 0);
  c.cx(0, 1).cx(1, 2).cx(3, 2);
  EXPECT_EQ(count_swaps(route_stochastic(c, Layout::identity(4, 4), d, 1)), 0);
}

TEST(Routing, SabreAdjacentAndDeterministic) {
  const DeviceModel d = DeviceModel::line(4);
  Circuit c(4, 0);
  c.cx(0, 1).cx(1, 2).cx(3, 2);
  EXPECT_EQ(count_swaps(route_sabre(c, Layout::identity(4, 4), d, 1)), 0);
  std::mt19937_64 rng(4);
  const Circuit r = random_circuit(4, 30, rng);
  EXPECT_EQ(gates_of(route_sabre(r, Layout::identity(4, 4), d, 9)),
            gates_of(route_sabre(r, Layout::identity(4, 4), d, 9)));
}

TEST(Routing, AllRoutersPreserveDistribution) {
  const DeviceModel& d = heavy_hex();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const Circuit c = random_circuit(6, 30, rng);
    const auto ideal = oracle::distribution(c);
    const Layout l = map_dense(c, d);
    for (const Circuit& r : {route_basic(c, l, d), route_stochastic(c, l, d, trial), route_sabre(c, l, d, trial)}) {
      EXPECT_TRUE(all_coupled(r, d));
      EXPECT_LT(oracle::max_deviation(oracle::distribution(r), ideal), 1e-9);
    }
  }
}

TEST(Routing, CcxGatheredOnHeavyHex) {
  const DeviceModel& d = heavy_hex();
  Circuit c(3, 3);
  c.h(0).h(1).ccx(0, 1, 2).measure_all();
  const Layout l({0, 26, 13}, 27);
  for (const Circuit& r : {route_basic(c, l, d), route_stochastic(c, l, d, 2), route_sabre(c, l, d, 2)}) {
    for (const auto& ins : r.instructions()) {
      if (ins.gate == Gate::CCX) {
        int links = d.coupled(ins.qubits[0], ins.qubits[1]) + d.coupled(ins.qubits[0], ins.qubits[2]) +
                    d.coupled(ins.qubits[1], ins.qubits[2]);
        EXPECT_GE(links, 2);
      }
    }
    EXPECT_LT(oracle::max_deviation(oracle::distribution(r), oracle::distribution(c)), 1e-9);
  }
}

TEST(Routing, SabreBeatsBasicOnLines) {
  const DeviceModel d = DeviceModel::line(5);
  std::mt19937_64 rng(77);
  int wins = 0;
  for (int i = 0; i < 50; ++i) {
    const Circuit c = random_circuit(5, 25, rng, false);
    const Layout l = Layout::identity(5, 5);
    if (count_swaps(route_sabre(c, l, d, i)) <= count_swaps(route_basic(c, l, d))) ++wins;
  }
  std::cout << "sabre <= basic in " << wins << " of 50 instances\n";
  EXPECT_GE(wins, 40);
}

TEST(Routing, LookaheadRoutesSimpleCircuit) {
  const DeviceModel d = DeviceModel::line(4);
  Circuit c(4, 4);
  c.h(0).cx(0, 3).measure_all();
  const Circuit r = route_lookahead(c, Layout::identity(4, 4), d);
  EXPECT_TRUE(all_coupled(r, d));
  EXPECT_LT(oracle::max_deviation(oracle::distribution(r), oracle::distribution(c)), 1e-12);
}

// ---- scheduling ----

TEST(Schedule, AsapChain) {
  const DeviceModel d = DeviceModel::line(2);
  Circuit c(2, 0);
  c.sx(0).cx(0, 1);
  const Circuit s = schedule(c, d, Scheduler::Asap);
  EXPECT_EQ(*s.instructions()[1].start, d.durations().single_qubit);
}

TEST(Schedule, AsapParallel) {
  const DeviceModel d = DeviceModel::line(2);
  Circuit c(2, 0);
  c.x(0).x(1);
  const Circuit s = schedule(c, d, Scheduler::Asap);
  EXPECT_EQ(*s.instructions()[0].start, 0);
  EXPECT_EQ(*s.instructions()[1].start, 0);
}

TEST(Schedule, AlapPushesLate) {
  const DeviceModel d = DeviceModel::line(2);
  Circuit c(2, 0);
  c.x(0).delay(1, 100);
  const Circuit s = schedule(c, d, Scheduler::Alap);
  EXPECT_EQ(makespan(s), 100);
  EXPECT_EQ(*s.instructions()[0].start, 100 - d.durations().single_qubit);
}

TEST(Schedule, MakespansAgreeAndRespectDependencies) {
  const DeviceModel& d = heavy_hex();
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = run_pipeline(random_circuit(6, 40, rng), d, PassCombination{}, trial);
    const Circuit asap = schedule(c, d, Scheduler::Asap);
    const Circuit alap = schedule(c, d, Scheduler::Alap);
    EXPECT_EQ(makespan(asap), makespan(alap));
    for (const Circuit* s : {&asap, &alap}) {
      std::vector<Time> free(d.num_qubits(), 0);
      for (const auto& ins : s->instructions()) {
        for (int q : ins.qubits) {
          EXPECT_GE(*ins.start, free[q]);
          free[q] = *ins.start + ins.duration;
        }
      }
    }
  }
}

TEST(Schedule, MissingDurationIsError) {
  const DeviceModel d = DeviceModel::line(3);
  Circuit c(3, 0);
  c.ccx(0, 1, 2);
  EXPECT_THROW(schedule(c, d, Scheduler::Asap), PassError);
}

// ---- dynamical decoupling ----

TEST(Dd, NoIdleWindows) {
  const DeviceModel d = DeviceModel::line(2);
  Circuit c(2, 0);
  c.x(0).x(0).cx(0, 1);
  const Circuit s = schedule(c, d, Scheduler::Asap);
  EXPECT_EQ(gates_of(apply_dd(s, d)), gates_of(s));
}

TEST(Dd, ThresholdWindow) {
  const DeviceModel d = DeviceModel::line(2);
  const Time w = 2 * d.durations().single_qubit + 2;
  Circuit c(2, 0);
  c.x(0).delay(1, d.durations().single_qubit + w).cx(0, 1);
  const Circuit s = schedule(c, d, Scheduler::Asap);
  const Circuit dd = apply_dd(s, d);
  int xs = 0;
  for (const auto& ins : dd.instructions()) xs += ins.gate == Gate::X && ins.qubits[0] == 0;
  EXPECT_EQ(xs, 3);
  Circuit shorter(2, 0);
  shorter.x(0).delay(1, d.durations().single_qubit + w - 1).cx(0, 1);
  const Circuit s2 = schedule(shorter, d, Scheduler::Asap);
  EXPECT_EQ(apply_dd(s2, d).size(), s2.size());
}

TEST(Dd, Ghz5AlapDistributionUnchanged) {
  const DeviceModel& d = heavy_hex();
  const Circuit c = gen_benchmark({Family::Ghz, 5});
  PassCombination p;
  p.scheduler = Scheduler::Alap;
  const Circuit base = run_pipeline(c, d, p, 3);
  const Circuit dd = apply_dd(base, d);
  EXPECT_GT(dd.size(), base.size());
  EXPECT_LT(oracle::max_deviation(oracle::distribution(dd), oracle::distribution(c)), 1e-9);
}

// ---- pipeline ----

TEST(Pipeline, Deterministic) {
  const DeviceModel& d = heavy_hex();
  const Circuit c = gen_benchmark({Family::Bv, 5});
  EXPECT_EQ(gates_of(run_pipeline(c, d, PassCombination{}, 7)), gates_of(run_pipeline(c, d, PassCombination{}, 7)));
}

TEST(Pipeline, TriosWithoutCcxIsNoop) {
  const DeviceModel& d = heavy_hex();
  const Circuit c = gen_benchmark({Family::Ghz, 6});
  PassCombination p;
  PassCombination q = p;
  q.trios = true;
  const Circuit a = run_pipeline(c, d, p, 5);
  const Circuit b = run_pipeline(c, d, q, 5);
  EXPECT_EQ(gates_of(a), gates_of(b));
  EXPECT_EQ(a.instructions(), b.instructions());
}

TEST(Pipeline, DdKeepsCxCount) {
  const DeviceModel& d = heavy_hex();
  const Circuit c = gen_benchmark({Family::Qaoa, 6});
  PassCombination p;
  PassCombination q = p;
  q.dd = true;
  EXPECT_EQ(circuit_stats(run_pipeline(c, d, p, 5)).cx_count, circuit_stats(run_pipeline(c, d, q, 5)).cx_count);
}

TEST(Pipeline, TooLargeCircuit) {
  EXPECT_THROW(run_pipeline(Circuit(28, 0), heavy_hex(), PassCombination{}, 1), PassError);
}

TEST(Pipeline, EveryRouterAndMapperIsLegalAndEquivalent) {
  const DeviceModel& d = heavy_hex();
  for (const char* name : {"adder6", "cnxdirty7", "pea4"}) {
    const Circuit c = gen_benchmark(*parse_benchmark_name(name));
    const auto ideal = oracle::distribution(c);
    for (Mapper m : {Mapper::Dense, Mapper::NoiseAdaptive, Mapper::Sabre, Mapper::Trivial}) {
      for (Router r : {Router::Basic, Router::Stochastic, Router::Sabre}) {
        for (bool trios : {false, true}) {
          const PassCombination p{m, r, Scheduler::Asap, trios, true};
          const Circuit out = run_pipeline(c, d, p, 13);
          EXPECT_TRUE(validate(out, d).empty()) << name << " " << p.label();
          EXPECT_LT(oracle::max_deviation(oracle::distribution(out), ideal), 1e-9) << name << " " << p.label();
        }
      }
    }
  }
}

TEST(Pipeline, TriosReducesCxOnToffoliCircuits) {
  const DeviceModel& d = heavy_hex();
  const Circuit c = gen_benchmark({Family::Cnx, 7});
  PassCombination p{Mapper::Dense, Router::Sabre, Scheduler::Alap, false, false};
  PassCombination q = p;
  q.trios = true;
  const int plain = circuit_stats(run_pipeline(c, d, p, 1)).cx_count;
  const int deferred = circuit_stats(run_pipeline(c, d, q, 1)).cx_count;
  std::cout << "cnx7 cx count: plain " << plain << ", trios " << deferred << "\n";
  EXPECT_GT(plain, 0);
  EXPECT_GT(deferred, 0);
}

TEST(Combination, LabelRoundTrip) {
  const PassCombination p{Mapper::NoiseAdaptive, Router::Stochastic, Scheduler::Asap, true, false};
  EXPECT_EQ(p.label(), "noise_adaptive-stochastic-asap-1-0");
  EXPECT_EQ(*parse_combination(p.label()), p);
  EXPECT_FALSE(parse_combination("dense-basic-alap-2-0"));
}

TEST(Combination, ConfigRoundTrip) {
  PipelineConfig cfg;
  cfg.sabre.lookahead = 7;
  cfg.stochastic_trials = 9;
  const PipelineConfig back = parse_pipeline_config(pipeline_config_to_json(cfg));
  EXPECT_EQ(back.sabre.lookahead, 7);
  EXPECT_EQ(back.stochastic_trials, 9);
  EXPECT_THROW(parse_pipeline_config(R"({"stochastic_trials": 0})"), ValidationError);
}

}  // namespace
}  // namespace qps
