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

#include "qps/clifford/cliffordize.hpp"

#include <cmath>
#include <string>

#include "qps/clifford/simulate.hpp"
#include "qps/error.hpp"
#include "qps/util/random.hpp"

namespace qps {

namespace {

constexpr double kQuarter = std::numbers::pi / 4;

std::uint64_t gap(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

}  // namespace

CliffordizeResult cliffordize(const Circuit& c, std::uint64_t target_peaks, const CliffordizeConfig& cfg) {
  if (!(cfg.delta > 0 && cfg.delta < kQuarter)) throw ValidationError("delta must lie in (0, pi/4)");
  if (cfg.max_attempts < 1) throw ValidationError("max_attempts must be positive");

  // Fixed rounding for every RZ outside the band; band entries remember the
  // odd multiple n they sit next to.
  std::vector<Instruction> base = c.instructions();
  std::vector<std::pair<std::size_t, int>> band;
  for (std::size_t i = 0; i < base.size(); ++i) {
    Instruction& ins = base[i];
    switch (ins.gate) {
      case Gate::I:
      case Gate::X:
      case Gate::SX:
      case Gate::CX:
      case Gate::Measure:
      case Gate::Delay:
      case Gate::Barrier:
        continue;
      case Gate::RZ:
        break;
      default:
        throw ValidationError("gate '" + std::string(gate_name(ins.gate)) + "' is outside the dummy basis");
    }
    const double theta = ins.angle;
    if (is_clifford_angle(theta)) continue;
    const long odd = 2 * std::lround((theta / kQuarter - 1) / 2) + 1;
    if (std::abs(theta - odd * kQuarter) < cfg.delta) {
      band.emplace_back(i, static_cast<int>(odd));
    } else {
      const long k = std::lround(theta / (2 * kQuarter));
      ins.angle = canonical_angle(static_cast<double>(k % 4) * 2 * kQuarter);
    }
  }

  CliffordizeResult best;
  std::uint64_t best_gap = 0;
  const int attempts = band.empty() ? 1 : cfg.max_attempts;
  for (int a = 0; a < attempts; ++a) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(a)));
    std::vector<Instruction> trial = base;
    for (auto [i, odd] : band) {
      const int m = (rng() >> 63) ? odd + 1 : odd - 1;
      trial[i].angle = canonical_angle(m * kQuarter);
      trial[i].angle = quarter_turns(trial[i].angle) * 2 * kQuarter;
    }
    Circuit dummy(c.num_qubits(), c.num_clbits());
    dummy.set_instructions(std::move(trial));
    if (c.initial_layout() && c.final_layout()) dummy.set_layouts(*c.initial_layout(), *c.final_layout());
    const std::uint64_t peaks = stabilizer_support(dummy).size();
    const std::uint64_t g = gap(peaks, target_peaks);
    if (a == 0 || g < best_gap) {
      best = {std::move(dummy), peaks, a + 1};
      best_gap = g;
    }
    best.attempts = a + 1;
    if (g == 0) break;
  }
  return best;
}

}  // namespace qps
