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

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "oracle.hpp"
#include "qps/bench/generators.hpp"
#include "qps/clifford/cliffordize.hpp"
#include "qps/clifford/simulate.hpp"
#include "qps/clifford/tableau.hpp"
#include "qps/error.hpp"
#include "qps/ir/analysis.hpp"
#include "qps/ir/decompose.hpp"
#include "qps/ir/qasm.hpp"

namespace qps {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_matches_oracle(const Distribution& got, const Circuit& c, double tol = 1e-9) {
  EXPECT_LE(oracle::max_deviation(got.probabilities(), oracle::distribution(c)), tol);
}

Circuit random_clifford(int n, int gates, std::mt19937_64& rng) {
  Circuit c(n, n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int g = 0; g < gates; ++g) {
    const int q = pick(rng);
    switch (rng() % 8) {
      case 0: c.h(q); break;
      case 1: c.s(q); break;
      case 2: c.sx(q); break;
      case 3: c.x(q); break;
      case 4: c.rz(q, kPi / 2 * static_cast<double>(rng() % 4)); break;
      case 5: c.z(q); break;
      default: {
        int t = pick(rng);
        if (t == q) t = (q + 1) % n;
        if (n > 1) c.cx(q, t);
      }
    }
  }
  // Measure a random subset into random distinct clbits.
  std::vector<int> bits(n);
  std::iota(bits.begin(), bits.end(), 0);
  std::shuffle(bits.begin(), bits.end(), rng);
  for (int q = 0; q < n; ++q)
    if (rng() % 4 != 0) c.measure(q, bits[q]);
  return c;
}

// ---- tableau ----

TEST(Tableau, StaysConsistent) {
  std::mt19937_64 rng(5);
  StabilizerTableau t(6);
  for (int i = 0; i < 500; ++i) {
    const int q = static_cast<int>(rng() % 6);
    switch (rng() % 6) {
      case 0: t.h(q); break;
      case 1: t.s(q); break;
      case 2: t.sx(q); break;
      case 3: t.cx(q, (q + 1 + rng() % 5) % 6); break;
      case 4: t.swap(q, (q + 1) % 6); break;
      default: t.measure(q, static_cast<int>(rng() % 2)); break;
    }
    ASSERT_TRUE(t.is_consistent());
  }
}

TEST(Tableau, MeasurementCollapses) {
  StabilizerTableau t(2);
  t.h(0);
  t.cx(0, 1);
  EXPECT_TRUE(t.is_random(0));
  bool random = false;
  EXPECT_EQ(t.measure(0, 1, &random), 1);
  EXPECT_TRUE(random);
  EXPECT_FALSE(t.is_random(1));
  EXPECT_EQ(t.measure(1, 0, &random), 1);
  EXPECT_FALSE(random);
}

TEST(Tableau, SxSquaredIsX) {
  StabilizerTableau t(1);
  t.sx(0);
  t.sx(0);
  EXPECT_EQ(t.measure(0), 1);
}

// ---- stabilizer simulation ----

TEST(Stabilizer, Ghz3) {
  Circuit c(3, 3);
  c.h(0).cx(0, 1).cx(1, 2).measure_all();
  const Distribution d = stabilizer_simulate(c);
  EXPECT_EQ(d.probabilities(), (std::map<std::string, double>{{"000", 0.5}, {"111", 0.5}}));
}

TEST(Stabilizer, XThenMeasure) {
  Circuit c(1, 1);
  c.x(0).measure(0, 0);
  EXPECT_EQ(stabilizer_simulate(c).probabilities(), (std::map<std::string, double>{{"1", 1.0}}));
}

TEST(Stabilizer, RandomCliffordMatchOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Circuit c = random_clifford(n, 10 + static_cast<int>(rng() % 60), rng);
    const Distribution s = stabilizer_simulate(c);
    expect_matches_oracle(s, c);
    EXPECT_LE(s.max_deviation(statevector_simulate(c)), 1e-9);
    std::set<double> levels;
    for (const auto& [k, p] : s.probabilities()) levels.insert(p);
    EXPECT_EQ(levels.size(), 1u);
  }
}

TEST(Stabilizer, MidCircuitMeasurement) {
  Circuit c(2, 2);
  c.h(0).cx(0, 1).measure(0, 0).h(1).measure(1, 1);
  expect_matches_oracle(stabilizer_simulate(c), c);
}

TEST(Stabilizer, SupportMembership) {
  Circuit c(3, 3);
  c.h(0).cx(0, 1).h(2).measure_all();
  const AffineSupport s = stabilizer_support(c);
  EXPECT_EQ(s.rank(), 2);
  EXPECT_TRUE(s.contains("011"));
  EXPECT_TRUE(s.contains("100"));
  EXPECT_FALSE(s.contains("001"));
  EXPECT_THROW(s.contains("01"), ValidationError);
}

TEST(Stabilizer, RejectsNonClifford) {
  Circuit c(1, 1);
  c.rz(0, 0.3).measure(0, 0);
  EXPECT_THROW(stabilizer_simulate(c), SimulationError);
  Circuit t(3, 3);
  t.ccx(0, 1, 2).measure_all();
  EXPECT_THROW(stabilizer_simulate(t), SimulationError);
}

TEST(Stabilizer, WideButShallow) {
  // 60 qubits; only the support matters, never a dense state.
  Circuit c(60, 60);
  c.h(0);
  for (int q = 0; q + 1 < 60; ++q) c.cx(q, q + 1);
  c.measure_all();
  const AffineSupport s = stabilizer_support(c);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(std::string(60, '1')));
}

// ---- statevector ----

TEST(Statevector, HadamardIsFair) {
  Circuit c(1, 1);
  c.h(0).measure(0, 0);
  const Distribution d = statevector_simulate(c);
  EXPECT_NEAR(d.probability("0"), 0.5, 1e-12);
  EXPECT_NEAR(d.probability("1"), 0.5, 1e-12);
}

TEST(Statevector, PhaseIsInvisible) {
  for (double theta : {0.1, 1.0, 2.5, 5.9}) {
    Circuit c(1, 1);
    c.rz(0, theta).measure(0, 0);
    EXPECT_NEAR(statevector_simulate(c).probability("0"), 1.0, 1e-12);
  }
}

TEST(Statevector, QubitCap) {
  Circuit c(22, 1);
  for (int q = 0; q < 22; ++q) c.h(q);
  c.measure(0, 0);
  EXPECT_THROW(statevector_simulate(c), SimulationError);
  EXPECT_NO_THROW(statevector_simulate(c, 22));
}

TEST(Statevector, IdleQubitsAreFree) {
  Circuit c(40, 2);
  c.h(3).cx(3, 39).measure(3, 0).measure(39, 1);
  const Distribution d = statevector_simulate(c);
  EXPECT_NEAR(d.probability("11"), 0.5, 1e-12);
}

TEST(Statevector, RandomCircuitsMatchOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    Circuit c(n, n);
    for (int g = 0; g < 40; ++g) {
      const int q = static_cast<int>(rng() % n);
      switch (rng() % 4) {
        case 0: c.h(q); break;
        case 1: c.rz(q, std::uniform_real_distribution<double>(0, 2 * kPi)(rng)); break;
        case 2: c.sx(q); break;
        default:
          if (n > 1) c.cx(q, (q + 1 + static_cast<int>(rng() % (n - 1))) % n);
      }
    }
    if (n >= 3) c.ccx(0, 1, 2);
    c.measure_all();
    expect_matches_oracle(statevector_simulate(c), c);
  }
}

// ---- peaks ----

TEST(Peaks, Counts) {
  EXPECT_EQ(count_peaks(Distribution(3, {{"000", 0.5}, {"111", 0.5}})), 2);
  EXPECT_EQ(count_peaks(Distribution(2, {{"10", 1.0}})), 1);
  std::map<std::string, double> uniform;
  for (int i = 0; i < 8; ++i) uniform[format_mask(i, 3)] = 0.125;
  EXPECT_EQ(count_peaks(Distribution(3, uniform)), 8);
  EXPECT_EQ(count_peaks(Distribution(1, {{"0", 1 - 5e-7}, {"1", 5e-7}})), 1);
}

// ---- cliffordize ----

Circuit single_rz(double theta) {
  Circuit c(1, 1);
  c.sx(0).rz(0, theta).sx(0).measure(0, 0);
  return c;
}

double rz_angle(const Circuit& c) {
  for (const auto& ins : c.instructions())
    if (ins.gate == Gate::RZ) return ins.angle;
  return -1;
}

TEST(Cliffordize, NearestMultiple) {
  const auto r = cliffordize(single_rz(kPi / 3), 1);
  EXPECT_NEAR(rz_angle(r.circuit), kPi / 2, 1e-12);
  EXPECT_EQ(r.attempts, 1);
}

TEST(Cliffordize, BandChoiceVariesAcrossAttempts) {
  // sx rz(0) sx = X gives one peak, sx rz(pi/2) sx gives two.
  const auto one = cliffordize(single_rz(kPi / 4), 1, {.seed = 9});
  EXPECT_NEAR(rz_angle(one.circuit), 0.0, 1e-12);
  EXPECT_EQ(one.peaks, 1u);
  const auto two = cliffordize(single_rz(kPi / 4), 2, {.seed = 9});
  EXPECT_NEAR(rz_angle(two.circuit), kPi / 2, 1e-12);
  EXPECT_EQ(two.peaks, 2u);
  // Unreachable target: every attempt is used and the earliest closest kept.
  const auto none = cliffordize(single_rz(kPi / 4), 5, {.max_attempts = 7, .seed = 9});
  EXPECT_EQ(none.attempts, 7);
  EXPECT_EQ(none.peaks, 2u);
}

TEST(Cliffordize, BandBoundaryIsStrict) {
  const double delta = kPi / 100;
  // Exactly delta away from pi/4 rounds to the nearest multiple, 0.
  const auto r = cliffordize(single_rz(kPi / 4 - delta), 2, {.max_attempts = 20});
  EXPECT_NEAR(rz_angle(r.circuit), 0.0, 1e-12);
  EXPECT_EQ(r.attempts, 1);
}

TEST(Cliffordize, CliffordInputIsFixedPoint) {
  Circuit c(2, 2);
  c.sx(0).rz(0, kPi / 2).cx(0, 1).rz(1, kPi).measure_all();
  const auto r = cliffordize(c, 4);
  EXPECT_TRUE(r.circuit.structurally_equal(c));
  EXPECT_EQ(r.attempts, 1);
}

TEST(Cliffordize, RejectsNonBasis) {
  Circuit c(1, 1);
  c.h(0).measure(0, 0);
  EXPECT_THROW(cliffordize(c, 1), ValidationError);
}

TEST(Cliffordize, StructureAndAngleInvariants) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Circuit c(n, n);
    for (int g = 0; g < 50; ++g) {
      const int q = static_cast<int>(rng() % n);
      switch (rng() % 4) {
        case 0: c.sx(q); break;
        case 1: c.rz(q, std::uniform_real_distribution<double>(-7, 7)(rng)); break;
        case 2: c.x(q); break;
        default: c.cx(q, (q + 1) % n);
      }
    }
    c.measure_all();
    const auto r = cliffordize(c, 3, {.seed = static_cast<std::uint64_t>(trial)});
    ASSERT_EQ(r.circuit.size(), c.size());
    EXPECT_EQ(circuit_stats(r.circuit).cx_count, circuit_stats(c).cx_count);
    EXPECT_EQ(circuit_stats(r.circuit).depth, circuit_stats(c).depth);
    EXPECT_EQ(circuit_stats(r.circuit).non_clifford, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& a = c.instructions()[i];
      const auto& b = r.circuit.instructions()[i];
      EXPECT_EQ(a.gate, b.gate);
      EXPECT_EQ(a.qubits, b.qubits);
      if (a.gate != Gate::RZ) {
        EXPECT_EQ(a, b);
        continue;
      }
      const double k = b.angle / (kPi / 2);
      EXPECT_NEAR(k, std::round(k), 1e-12);
      const double shift = std::abs(std::remainder(b.angle - a.angle, 2 * kPi));
      EXPECT_LE(shift, kPi / 4 + kPi / 100 + 1e-12);
    }
    EXPECT_EQ(r.peaks, stabilizer_support(r.circuit).size());
  }
}

TEST(Cliffordize, Deterministic) {
  const Circuit c = decompose_to_basis(gen_benchmark({.family = Family::Qaoa, .qubits = 4}), {Gate::X, Gate::SX, Gate::RZ, Gate::CX}, false);
  const auto a = cliffordize(c, 4, {.seed = 3});
  const auto b = cliffordize(c, 4, {.seed = 3});
  EXPECT_TRUE(a.circuit.structurally_equal(b.circuit));
  EXPECT_EQ(a.attempts, b.attempts);
}

// ---- benchmark generators ----

Distribution ideal(const BenchmarkSpec& s) { return statevector_simulate(gen_benchmark(s)); }

TEST(Bench, BernsteinVazirani) {
  const Distribution d = ideal({.family = Family::Bv, .qubits = 5, .secret = "1011"});
  EXPECT_NEAR(d.probability("1011"), 1.0, 1e-9);
  expect_matches_oracle(d, gen_benchmark({.family = Family::Bv, .qubits = 5, .secret = "1011"}));
  EXPECT_NEAR(ideal({.family = Family::Bv, .qubits = 8}).probability("1111111"), 1.0, 1e-9);
}

TEST(Bench, GhzHasTwoPeaks) {
  EXPECT_EQ(count_peaks(ideal({.family = Family::Ghz, .qubits = 12})), 2);
}

TEST(Bench, AdderAdds) {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const BenchmarkSpec s{.family = Family::Adder, .qubits = 6, .a = a, .b = b};
      const int sum = a + b;
      // b register (2 bits) in clbits 0..1, carry in clbit 2.
      const std::string expect = format_mask(static_cast<std::uint64_t>(sum), 3);
      EXPECT_NEAR(ideal(s).probability(expect), 1.0, 1e-9) << a << "+" << b;
    }
  }
  const Circuit c = gen_benchmark({.family = Family::Adder, .qubits = 4});
  EXPECT_GT(std::count_if(c.instructions().begin(), c.instructions().end(),
                          [](const Instruction& i) { return i.gate == Gate::CCX; }),
            0);
}

TEST(Bench, MultiControlledX) {
  for (Family f : {Family::Cnx, Family::CnxDirty}) {
    for (int n : {3, 5, 7, 9}) {
      const BenchmarkSpec s{.family = f, .qubits = n};
      const Circuit c = gen_benchmark(s);
      const Distribution d = statevector_simulate(c);
      ASSERT_EQ(count_peaks(d), 1) << s.name();
      const std::string out = d.support().front();
      // Controls are set, so the target (highest qubit, first character) flips.
      EXPECT_EQ(out.front(), '1') << s.name();
      const int m = (n + 1) / 2;
      for (int q = 0; q < m; ++q) EXPECT_EQ(out[n - 1 - q], '1') << s.name();
      // Ancillas come back as they started.
      Circuit prep(n, n);
      for (int q = 0; q < m; ++q) prep.x(q);
      if (f == Family::CnxDirty)
        for (int i = 0; i < m - 2; i += 2) prep.x(m + i);
      const std::string start = statevector_simulate(prep.measure_all()).support().front();
      for (int q = m; q < n - 1; ++q) EXPECT_EQ(out[n - 1 - q], start[n - 1 - q]) << s.name();
      expect_matches_oracle(d, c);
    }
  }
}

TEST(Bench, PhaseEstimationPeak) {
  // 0.3125 = 0.0101b is exact with four counting qubits.
  const Distribution d = ideal({.family = Family::Pea, .qubits = 5});
  EXPECT_NEAR(d.probability("0101"), 1.0, 1e-9);
  expect_matches_oracle(d, gen_benchmark({.family = Family::Pea, .qubits = 5}));
}

TEST(Bench, QaoaMatchesOracle) {
  const Circuit c = gen_benchmark({.family = Family::Qaoa, .qubits = 5});
  expect_matches_oracle(statevector_simulate(c), c);
  EXPECT_GT(count_peaks(statevector_simulate(c)), 2);
}

TEST(Bench, NamesRoundTrip) {
  for (const char* name : {"bv5", "ghz12", "qaoa6", "adder10", "cnx7", "cnxdirty11", "pea6"}) {
    const auto s = parse_benchmark_name(name);
    ASSERT_TRUE(s.has_value()) << name;
    EXPECT_EQ(s->name(), name);
    const Circuit c = gen_benchmark(*s);
    EXPECT_TRUE(parse_qasm(emit_qasm(c)).structurally_equal(c)) << name;
  }
  EXPECT_FALSE(parse_benchmark_name("ghz").has_value());
  EXPECT_FALSE(parse_benchmark_name("foo3").has_value());
  EXPECT_FALSE(parse_benchmark_name("ghz3x").has_value());
}

TEST(Bench, InvalidSizes) {
  EXPECT_THROW(gen_benchmark({.family = Family::Adder, .qubits = 5}), ValidationError);
  EXPECT_THROW(gen_benchmark({.family = Family::Cnx, .qubits = 4}), ValidationError);
  EXPECT_THROW(gen_benchmark({.family = Family::Bv, .qubits = 4, .secret = "10"}), ValidationError);
}

}  // namespace
}  // namespace qps
