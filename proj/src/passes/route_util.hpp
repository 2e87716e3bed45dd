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

#include <utility>
#include <vector>

#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"

namespace qps::detail {

using Swap = std::pair<int, int>;

/// Lexicographically smallest shortest path from src to any node in
/// `targets`, never entering a node marked in `blocked`. Empty if unreachable.
std::vector<int> shortest_path(const DeviceModel& d, int src, const std::vector<int>& targets,
                               const std::vector<bool>& blocked);

/// SWAPs moving the occupant of physical a next to physical b.
std::vector<Swap> approach_swaps(const DeviceModel& d, int a, int b);

/// Operand positions of a multi-qubit gate under `layout`.
std::vector<int> positions(const Instruction& ins, const Layout& layout);

/// True when the gate's physical qubits can run it directly.
bool executable(const DeviceModel& d, const std::vector<int>& phys);

/// Distance-style cost: hop distance for pairs, min over centres of
/// sum(dist - 1) plus one for triples. Zero-cost triples are executable.
double gate_cost(const DeviceModel& d, const std::vector<int>& phys);

/// SWAPs that make a blocked gate executable from the given positions.
/// Applying them in order to a layout is the caller's job. Throws PassError
/// when the operands cannot be gathered.
std::vector<Swap> gather_swaps(const DeviceModel& d, std::vector<int> phys);

/// Dependency front over the multi-qubit gates of a virtual circuit.
class Frontier {
 public:
  explicit Frontier(const Circuit& c);

  bool done() const { return remaining_ == 0; }

  /// Emits every instruction whose predecessors are done and which is either
  /// not a multi-qubit gate or passes `can_run`. Returns the number emitted.
  template <typename CanRun, typename Emit>
  int advance(CanRun&& can_run, Emit&& emit) {
    int emitted = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int q = 0; q < num_qubits_; ++q) {
        while (head_[q] < per_qubit_[q].size()) {
          const int i = per_qubit_[q][head_[q]];
          if (!ready(i)) break;
          const Instruction& ins = (*instrs_)[i];
          if (multi_qubit(ins) && !can_run(ins)) break;
          emit(ins);
          retire(i);
          ++emitted;
          progress = true;
        }
      }
    }
    return emitted;
  }

  /// Ready multi-qubit gates that could not run, in program order.
  std::vector<int> blocked() const;

  /// Up to `count` not-yet-run multi-qubit gates outside `front`, program order.
  std::vector<int> lookahead(const std::vector<int>& front, int count) const;

  const Instruction& instruction(int i) const { return (*instrs_)[i]; }

  static bool multi_qubit(const Instruction& ins) {
    return !is_directive(ins.gate) && ins.qubits.size() >= 2;
  }

 private:
  bool ready(int i) const;
  void retire(int i);

  const std::vector<Instruction>* instrs_;
  int num_qubits_;
  std::vector<std::vector<int>> per_qubit_;
  std::vector<std::size_t> head_;
  std::vector<bool> done_;
  std::size_t remaining_;
  std::size_t first_open_ = 0;
};

/// Accumulates the physical output of a router.
class RouteBuilder {
 public:
  RouteBuilder(const DeviceModel& d, const Layout& initial, int num_clbits)
      : num_physical_(d.num_qubits()), num_clbits_(num_clbits), initial_(initial), layout_(initial) {}

  const Layout& layout() const { return layout_; }

  void swap(int p, int q) {
    out_.push_back(make_gate(Gate::SWAP, {p, q}));
    layout_.swap_physical(p, q);
  }
  void apply(const std::vector<Swap>& swaps) {
    for (auto [p, q] : swaps) swap(p, q);
  }

  /// Emits a virtual instruction at the current layout; measurements wait
  /// for finish().
  void emit(const Instruction& ins);

  Circuit finish();

 private:
  int num_physical_;
  int num_clbits_;
  Layout initial_;
  Layout layout_;
  std::vector<Instruction> out_;
  std::vector<Instruction> measures_;
};

void check_fits(const Circuit& c, const DeviceModel& d);

}  // namespace qps::detail
