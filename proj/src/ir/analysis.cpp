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

#include "qps/ir/analysis.hpp"

#include <algorithm>

namespace qps {

CircuitStats circuit_stats(const Circuit& c) {
  CircuitStats s;
  std::vector<int> level(c.num_qubits(), 0);
  for (const Instruction& ins : c.instructions()) {
    if (ins.gate == Gate::Barrier || ins.gate == Gate::Delay) continue;
    ++s.total_gates;
    if (ins.gate == Gate::CX) ++s.cx_count;
    if (ins.gate == Gate::RZ && !is_clifford_angle(ins.angle)) ++s.non_clifford;
    int l = 0;
    for (int q : ins.qubits) l = std::max(l, level[q]);
    ++l;
    for (int q : ins.qubits) level[q] = l;
    s.depth = std::max(s.depth, l);
  }
  return s;
}

std::vector<int> active_qubits(const Circuit& c) {
  std::vector<bool> used(c.num_qubits(), false);
  for (const Instruction& ins : c.instructions()) {
    if (ins.gate == Gate::Barrier) continue;
    for (int q : ins.qubits) used[q] = true;
  }
  std::vector<int> out;
  for (int q = 0; q < c.num_qubits(); ++q)
    if (used[q]) out.push_back(q);
  return out;
}

std::vector<Violation> validate(const Circuit& c, const DeviceModel& d) {
  std::vector<Violation> out;
  const auto& ins = c.instructions();
  for (std::size_t i = 0; i < ins.size(); ++i) {
    const Instruction& g = ins[i];
    const std::string name(gate_name(g.gate));
    bool in_range = true;
    for (int q : g.qubits) {
      if (q >= d.num_qubits()) {
        out.push_back({Violation::Kind::QubitOutOfRange, i, name + " uses qubit " + std::to_string(q) +
                                                                 " beyond the device"});
        in_range = false;
      }
    }
    if (!d.in_basis(g.gate)) out.push_back({Violation::Kind::NonBasisGate, i, name + " is not a basis gate"});
    if (!in_range || g.gate == Gate::Barrier) continue;
    if (g.qubits.size() >= 2) {
      for (std::size_t a = 0; a < g.qubits.size(); ++a) {
        for (std::size_t b = a + 1; b < g.qubits.size(); ++b) {
          if (g.gate == Gate::CCX) continue;
          if (!d.coupled(g.qubits[a], g.qubits[b])) {
            out.push_back({Violation::Kind::UncoupledGate, i,
                           name + " on uncoupled pair (" + std::to_string(g.qubits[a]) + "," +
                               std::to_string(g.qubits[b]) + ")"});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace qps
