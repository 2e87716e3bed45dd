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

#include "qps/clifford/simulate.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <string>
#include <unordered_map>

#include "qps/error.hpp"
#include "qps/ir/analysis.hpp"
#include "qps/linalg/statevector.hpp"

namespace qps {

AffineSupport::AffineSupport(int width, std::uint64_t offset, std::vector<std::uint64_t> generators)
    : width_(width), offset_(offset) {
  // Gauss-Jordan over GF(2), highest bit first.
  for (std::uint64_t g : generators) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if ((g >> pivots_[i]) & 1) g ^= basis_[i];
    }
    if (g == 0) continue;
    const int pivot = 63 - std::countl_zero(g);
    for (auto& b : basis_) {
      if ((b >> pivot) & 1) b ^= g;
    }
    basis_.push_back(g);
    pivots_.push_back(pivot);
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if ((offset_ >> pivots_[i]) & 1) offset_ ^= basis_[i];
  }
}

std::uint64_t AffineSupport::size() const {
  return rank() >= 63 ? (std::uint64_t(1) << 63) : (std::uint64_t(1) << rank());
}

bool AffineSupport::contains(std::uint64_t outcome) const {
  std::uint64_t v = outcome ^ offset_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if ((v >> pivots_[i]) & 1) v ^= basis_[i];
  }
  return v == 0;
}

bool AffineSupport::contains(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != width_) throw ValidationError("outcome width does not match the register");
  std::uint64_t v = 0;
  for (int c = 0; c < width_; ++c) {
    if (bits[width_ - 1 - c] == '1') v |= std::uint64_t(1) << c;
  }
  return contains(v);
}

std::uint64_t AffineSupport::element(std::uint64_t coeffs) const {
  std::uint64_t v = offset_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if ((coeffs >> i) & 1) v ^= basis_[i];
  }
  return v;
}

Distribution AffineSupport::to_distribution(int max_rank) const {
  if (rank() > max_rank) throw SimulationError("support of rank " + std::to_string(rank()) + " is too large");
  std::map<std::string, double> probs;
  const std::uint64_t n = size();
  const double p = 1.0 / static_cast<double>(n);
  for (std::uint64_t k = 0; k < n; ++k) probs[format_mask(element(k), width_)] = p;
  return Distribution(width_, std::move(probs));
}

void apply_clifford(StabilizerTableau& t, const Instruction& ins, const std::vector<int>& index) {
  auto q = [&](int i) { return index[ins.qubits[i]]; };
  switch (ins.gate) {
    case Gate::I:
    case Gate::Delay:
    case Gate::Barrier:
      return;
    case Gate::X: return t.x(q(0));
    case Gate::Z: return t.z(q(0));
    case Gate::H: return t.h(q(0));
    case Gate::S: return t.s(q(0));
    case Gate::SX: return t.sx(q(0));
    case Gate::RZ: {
      if (!is_clifford_angle(ins.angle)) throw SimulationError("non-Clifford rotation in stabilizer simulation");
      const int k = quarter_turns(ins.angle);
      for (int i = 0; i < k; ++i) t.s(q(0));
      return;
    }
    case Gate::CX: return t.cx(q(0), q(1));
    case Gate::SWAP: return t.swap(q(0), q(1));
    default:
      throw SimulationError("gate '" + std::string(gate_name(ins.gate)) + "' is not Clifford");
  }
}

namespace {

struct Compressed {
  std::vector<int> index;
  int count = 0;
};

Compressed compress(const Circuit& c) {
  Compressed out;
  out.index.assign(c.num_qubits(), -1);
  for (int q : active_qubits(c)) out.index[q] = out.count++;
  return out;
}

}  // namespace

AffineSupport stabilizer_support(const Circuit& c) {
  if (c.num_clbits() > 64) throw SimulationError("stabilizer support is limited to 64 classical bits");
  const Compressed cq = compress(c);
  const auto& ins = c.instructions();
  std::size_t first_measure = ins.size();
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (ins[i].gate == Gate::Measure) {
      first_measure = i;
      break;
    }
    if (ins[i].gate == Gate::CCX) throw SimulationError("gate 'ccx' is not Clifford");
  }
  StabilizerTableau prefix(cq.count);
  for (std::size_t i = 0; i < first_measure; ++i) apply_clifford(prefix, ins[i], cq.index);

  // Replays the tail; `flip` selects which random measurement (by order of
  // occurrence) is forced to 1, -1 for none.
  std::vector<int> random_order;
  auto run = [&](int flip, bool record) {
    StabilizerTableau t = prefix;
    std::uint64_t outcome = 0;
    int seen = 0;
    for (std::size_t i = first_measure; i < ins.size(); ++i) {
      if (ins[i].gate != Gate::Measure) {
        apply_clifford(t, ins[i], cq.index);
        continue;
      }
      bool random = false;
      const int forced = seen == flip ? 1 : 0;
      const int bit = t.measure(cq.index[ins[i].qubits[0]], forced, &random);
      if (random) {
        if (record) random_order.push_back(seen);
        ++seen;
      }
      if (bit) outcome |= std::uint64_t(1) << ins[i].clbit;
    }
    return std::make_pair(outcome, seen);
  };
  const auto [offset, num_random] = run(-1, true);
  std::vector<std::uint64_t> gens;
  gens.reserve(num_random);
  for (int j = 0; j < num_random; ++j) gens.push_back(run(j, false).first ^ offset);
  return AffineSupport(c.num_clbits(), offset, std::move(gens));
}

Distribution stabilizer_simulate(const Circuit& c) { return stabilizer_support(c).to_distribution(); }

Distribution statevector_simulate(const Circuit& c, int max_qubits) {
  const Compressed cq = compress(c);
  if (cq.count > max_qubits) {
    throw SimulationError("statevector simulation limited to " + std::to_string(max_qubits) + " active qubits, got " +
                          std::to_string(cq.count));
  }
  if (c.num_clbits() > 64) throw SimulationError("statevector simulation is limited to 64 classical bits");
  StateVector<double> sv(cq.count);
  std::vector<std::pair<int, int>> measured;
  std::vector<int> qs;
  for (const auto& ins : c.instructions()) {
    if (ins.gate == Gate::Measure) {
      measured.emplace_back(cq.index[ins.qubits[0]], ins.clbit);
      continue;
    }
    if (is_directive(ins.gate)) continue;
    qs.clear();
    for (int q : ins.qubits) qs.push_back(cq.index[q]);
    sv.apply(ins, qs);
  }
  const auto probs = sv.probabilities();
  std::unordered_map<std::uint64_t, double> acc;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 1e-17) continue;
    std::uint64_t mask = 0;
    for (auto [q, cbit] : measured) {
      if ((i >> q) & 1) mask |= std::uint64_t(1) << cbit;
    }
    acc[mask] += probs[i];
  }
  std::map<std::string, double> out;
  double total = 0;
  for (const auto& [mask, p] : acc) total += p;
  for (const auto& [mask, p] : acc) out[format_mask(mask, c.num_clbits())] = p / total;
  return Distribution(c.num_clbits(), std::move(out));
}

int count_peaks(const Distribution& dist) { return static_cast<int>(dist.support(1e-6).size()); }

}  // namespace qps
