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
#include <vector>

#include "qps/ir/gate.hpp"

namespace qps {

/// Device time in abstract integer "dt" units.
using Time = std::int64_t;

struct Instruction {
  Gate gate = Gate::I;
  std::vector<int> qubits;
  /// Rotation angle in radians, canonical in [0, 2pi). Only meaningful for RZ.
  double angle = 0.0;
  /// Delay length for DELAY; filled for every instruction by scheduling.
  Time duration = 0;
  std::optional<Time> start;
  /// Classical target of MEASURE, -1 otherwise.
  int clbit = -1;

  bool operator==(const Instruction&) const = default;
};

/// Reduces an angle to [0, 2pi).
double canonical_angle(double theta);

/// True when theta is k*pi/2 for some integer k, within 1e-12 (mod 2pi).
bool is_clifford_angle(double theta);

/// Number of quarter turns k in [0,4) for a Clifford angle.
int quarter_turns(double theta);

Instruction make_gate(Gate g, std::vector<int> qubits);
Instruction make_rz(int q, double theta);
Instruction make_measure(int q, int clbit);
Instruction make_delay(int q, Time duration);
Instruction make_barrier(std::vector<int> qubits);

/// Injective virtual -> physical qubit assignment.
class Layout {
 public:
  Layout() = default;
  Layout(std::vector<int> virt_to_phys, int num_physical);

  static Layout identity(int num_virtual, int num_physical);

  int num_virtual() const { return static_cast<int>(v2p_.size()); }
  int num_physical() const { return static_cast<int>(p2v_.size()); }
  int phys(int v) const { return v2p_[v]; }
  /// Virtual qubit placed on p, or -1 for an unused physical qubit.
  int virt(int p) const { return p2v_[p]; }
  const std::vector<int>& virt_to_phys() const { return v2p_; }

  /// Exchanges the contents of two physical qubits.
  void swap_physical(int p, int q);

  bool operator==(const Layout&) const = default;

 private:
  std::vector<int> v2p_;
  std::vector<int> p2v_;
};

/// Ordered instruction list over num_qubits qubits. Physical circuits (router
/// output) carry the initial and final layouts used to produce them.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int num_qubits, int num_clbits);

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<Instruction>& instructions() const { return instrs_; }
  std::size_t size() const { return instrs_.size(); }
  bool empty() const { return instrs_.empty(); }

  /// Appends after checking operand ranges, distinctness, clbit uniqueness
  /// and that no qubit is used after it has been measured.
  Circuit& append(Instruction ins);

  Circuit& id(int q) { return append(make_gate(Gate::I, {q})); }
  Circuit& x(int q) { return append(make_gate(Gate::X, {q})); }
  Circuit& sx(int q) { return append(make_gate(Gate::SX, {q})); }
  Circuit& h(int q) { return append(make_gate(Gate::H, {q})); }
  Circuit& s(int q) { return append(make_gate(Gate::S, {q})); }
  Circuit& z(int q) { return append(make_gate(Gate::Z, {q})); }
  Circuit& rz(int q, double theta) { return append(make_rz(q, theta)); }
  Circuit& cx(int c, int t) { return append(make_gate(Gate::CX, {c, t})); }
  Circuit& ccx(int c0, int c1, int t) { return append(make_gate(Gate::CCX, {c0, c1, t})); }
  Circuit& swap(int a, int b) { return append(make_gate(Gate::SWAP, {a, b})); }
  Circuit& measure(int q, int c) { return append(make_measure(q, c)); }
  Circuit& delay(int q, Time d) { return append(make_delay(q, d)); }
  Circuit& barrier(std::vector<int> qs) { return append(make_barrier(std::move(qs))); }
  /// Measures qubit i into clbit i for every qubit, growing the register if needed.
  Circuit& measure_all();

  const std::optional<Layout>& initial_layout() const { return initial_layout_; }
  const std::optional<Layout>& final_layout() const { return final_layout_; }
  void set_layouts(Layout initial, Layout final_layout);
  void set_initial_layout(Layout l) { initial_layout_ = std::move(l); }

  /// True when every instruction has a start time.
  bool is_scheduled() const;

  /// Instruction list and register widths equal; schedule and layouts ignored.
  bool structurally_equal(const Circuit& other) const;

  /// Replaces the instruction list wholesale (used by passes that rebuild).
  void set_instructions(std::vector<Instruction> instrs);

 private:
  void check(const Instruction& ins, std::vector<bool>& measured, std::vector<bool>& clbit_used) const;

  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<Instruction> instrs_;
  std::vector<bool> measured_;
  std::vector<bool> clbit_used_;
  std::optional<Layout> initial_layout_;
  std::optional<Layout> final_layout_;
};

}  // namespace qps
