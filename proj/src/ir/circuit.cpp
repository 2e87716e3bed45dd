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

#include "qps/ir/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qps/error.hpp"

namespace qps {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-12;
}  // namespace

std::string_view gate_name(Gate g) {
  switch (g) {
    case Gate::I: return "id";
    case Gate::X: return "x";
    case Gate::SX: return "sx";
    case Gate::H: return "h";
    case Gate::S: return "s";
    case Gate::Z: return "z";
    case Gate::RZ: return "rz";
    case Gate::CX: return "cx";
    case Gate::CCX: return "ccx";
    case Gate::SWAP: return "swap";
    case Gate::Measure: return "measure";
    case Gate::Delay: return "delay";
    case Gate::Barrier: return "barrier";
  }
  return "?";
}

std::optional<Gate> gate_from_name(std::string_view name) {
  for (int k = 0; k < kNumGateKinds; ++k) {
    auto g = static_cast<Gate>(k);
    if (gate_name(g) == name) return g;
  }
  return std::nullopt;
}

int gate_arity(Gate g) {
  switch (g) {
    case Gate::CX:
    case Gate::SWAP:
      return 2;
    case Gate::CCX:
      return 3;
    case Gate::Barrier:
      return 0;
    default:
      return 1;
  }
}

double canonical_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool is_clifford_angle(double theta) {
  const double q = canonical_angle(theta) / (std::numbers::pi / 2);
  return std::abs(q - std::round(q)) * (std::numbers::pi / 2) <= kAngleTol;
}

int quarter_turns(double theta) {
  const double q = canonical_angle(theta) / (std::numbers::pi / 2);
  return static_cast<int>(std::lround(q)) % 4;
}

Instruction make_gate(Gate g, std::vector<int> qubits) {
  Instruction ins;
  ins.gate = g;
  ins.qubits = std::move(qubits);
  return ins;
}

Instruction make_rz(int q, double theta) {
  Instruction ins = make_gate(Gate::RZ, {q});
  ins.angle = canonical_angle(theta);
  return ins;
}

Instruction make_measure(int q, int clbit) {
  Instruction ins = make_gate(Gate::Measure, {q});
  ins.clbit = clbit;
  return ins;
}

Instruction make_delay(int q, Time duration) {
  Instruction ins = make_gate(Gate::Delay, {q});
  ins.duration = duration;
  return ins;
}

Instruction make_barrier(std::vector<int> qubits) { return make_gate(Gate::Barrier, std::move(qubits)); }

Layout::Layout(std::vector<int> virt_to_phys, int num_physical)
    : v2p_(std::move(virt_to_phys)), p2v_(num_physical, -1) {
  for (int v = 0; v < num_virtual(); ++v) {
    const int p = v2p_[v];
    if (p < 0 || p >= num_physical) throw ValidationError("layout maps virtual qubit outside the device");
    if (p2v_[p] != -1) throw ValidationError("layout is not injective");
    p2v_[p] = v;
  }
}

Layout Layout::identity(int num_virtual, int num_physical) {
  std::vector<int> v2p(num_virtual);
  for (int v = 0; v < num_virtual; ++v) v2p[v] = v;
  return Layout(std::move(v2p), num_physical);
}

void Layout::swap_physical(int p, int q) {
  const int vp = p2v_[p];
  const int vq = p2v_[q];
  p2v_[p] = vq;
  p2v_[q] = vp;
  if (vp >= 0) v2p_[vp] = q;
  if (vq >= 0) v2p_[vq] = p;
}

Circuit::Circuit(int num_qubits, int num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits), measured_(num_qubits), clbit_used_(num_clbits) {
  if (num_qubits < 0 || num_clbits < 0) throw ValidationError("negative register size");
}

void Circuit::check(const Instruction& ins, std::vector<bool>& measured, std::vector<bool>& clbit_used) const {
  const int arity = gate_arity(ins.gate);
  if (arity > 0 && static_cast<int>(ins.qubits.size()) != arity) {
    throw ValidationError(std::string(gate_name(ins.gate)) + " expects " + std::to_string(arity) + " qubit(s)");
  }
  if (ins.qubits.empty()) throw ValidationError(std::string(gate_name(ins.gate)) + " has no operands");
  for (std::size_t i = 0; i < ins.qubits.size(); ++i) {
    const int q = ins.qubits[i];
    if (q < 0 || q >= num_qubits_) {
      throw ValidationError("qubit index " + std::to_string(q) + " out of range (" + std::to_string(num_qubits_) +
                            " qubits)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ins.qubits[j] == q) throw ValidationError("duplicate qubit operand " + std::to_string(q));
    }
  }
  if (ins.gate != Gate::Barrier) {
    for (int q : ins.qubits) {
      if (measured[q]) throw ValidationError("qubit " + std::to_string(q) + " used after measurement");
    }
  }
  if (ins.gate == Gate::Measure) {
    if (ins.clbit < 0 || ins.clbit >= num_clbits_) throw ValidationError("classical bit out of range");
    if (clbit_used[ins.clbit]) throw ValidationError("classical bit " + std::to_string(ins.clbit) + " written twice");
    clbit_used[ins.clbit] = true;
    measured[ins.qubits[0]] = true;
  }
  if (ins.gate == Gate::Delay && ins.duration < 0) throw ValidationError("negative delay");
}

Circuit& Circuit::append(Instruction ins) {
  if (ins.gate == Gate::RZ) ins.angle = canonical_angle(ins.angle);
  check(ins, measured_, clbit_used_);
  instrs_.push_back(std::move(ins));
  return *this;
}

Circuit& Circuit::measure_all() {
  if (num_clbits_ < num_qubits_) {
    num_clbits_ = num_qubits_;
    clbit_used_.resize(num_clbits_, false);
  }
  for (int q = 0; q < num_qubits_; ++q) measure(q, q);
  return *this;
}

void Circuit::set_layouts(Layout initial, Layout final_layout) {
  initial_layout_ = std::move(initial);
  final_layout_ = std::move(final_layout);
}

bool Circuit::is_scheduled() const {
  return std::all_of(instrs_.begin(), instrs_.end(), [](const Instruction& i) { return i.start.has_value(); });
}

bool Circuit::structurally_equal(const Circuit& other) const {
  if (num_qubits_ != other.num_qubits_ || num_clbits_ != other.num_clbits_) return false;
  if (instrs_.size() != other.instrs_.size()) return false;
  for (std::size_t i = 0; i < instrs_.size(); ++i) {
    const Instruction& a = instrs_[i];
    const Instruction& b = other.instrs_[i];
    if (a.gate != b.gate || a.qubits != b.qubits || a.clbit != b.clbit) return false;
    if (a.gate == Gate::RZ && a.angle != b.angle) return false;
    if (a.gate == Gate::Delay && a.duration != b.duration) return false;
  }
  return true;
}

void Circuit::set_instructions(std::vector<Instruction> instrs) {
  std::vector<bool> measured(num_qubits_, false);
  std::vector<bool> used(num_clbits_, false);
  for (auto& ins : instrs) {
    if (ins.gate == Gate::RZ) ins.angle = canonical_angle(ins.angle);
    check(ins, measured, used);
  }
  instrs_ = std::move(instrs);
  measured_ = std::move(measured);
  clbit_used_ = std::move(used);
}

}  // namespace qps
