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

#include "qps/ir/decompose.hpp"

#include <array>
#include <numbers>
#include <string>

#include "qps/error.hpp"

namespace qps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDepth = 6;

void push_h(std::vector<Instruction>& out, int q) { out.push_back(make_gate(Gate::H, {q})); }
void push_rz(std::vector<Instruction>& out, int q, double t) { out.push_back(make_rz(q, t)); }
void push_cx(std::vector<Instruction>& out, int c, int t) { out.push_back(make_gate(Gate::CX, {c, t})); }

// One rewrite step for a gate outside the basis. Returns false when no rule applies.
bool rewrite(const Instruction& ins, const std::set<Gate>& basis, std::vector<Instruction>& out) {
  const auto& q = ins.qubits;
  switch (ins.gate) {
    case Gate::I:
      return true;
    case Gate::H:
      push_rz(out, q[0], kPi / 2);
      out.push_back(make_gate(Gate::SX, {q[0]}));
      push_rz(out, q[0], kPi / 2);
      return true;
    case Gate::S:
      push_rz(out, q[0], kPi / 2);
      return true;
    case Gate::Z:
      push_rz(out, q[0], kPi);
      return true;
    case Gate::X:
      out.push_back(make_gate(Gate::SX, {q[0]}));
      out.push_back(make_gate(Gate::SX, {q[0]}));
      return true;
    case Gate::SX:
      // S^dag H S^dag
      push_rz(out, q[0], 3 * kPi / 2);
      push_h(out, q[0]);
      push_rz(out, q[0], 3 * kPi / 2);
      return true;
    case Gate::RZ: {
      if (!is_clifford_angle(ins.angle)) return false;
      const int k = quarter_turns(ins.angle);
      if (k == 2 && basis.count(Gate::Z)) {
        out.push_back(make_gate(Gate::Z, {q[0]}));
      } else {
        for (int i = 0; i < k; ++i) out.push_back(make_gate(Gate::S, {q[0]}));
      }
      return true;
    }
    case Gate::SWAP:
      push_cx(out, q[0], q[1]);
      push_cx(out, q[1], q[0]);
      push_cx(out, q[0], q[1]);
      return true;
    case Gate::CCX: {
      auto t = textbook_ccx(q[0], q[1], q[2]);
      out.insert(out.end(), t.begin(), t.end());
      return true;
    }
    default:
      return false;
  }
}

void expand(const Instruction& ins, const std::set<Gate>& basis, bool keep_ccx, int depth,
            std::vector<Instruction>& out) {
  if (is_directive(ins.gate) || basis.count(ins.gate) || (keep_ccx && ins.gate == Gate::CCX)) {
    out.push_back(ins);
    return;
  }
  std::vector<Instruction> step;
  if (depth >= kMaxDepth || !rewrite(ins, basis, step)) {
    throw ValidationError("gate '" + std::string(gate_name(ins.gate)) + "' is not decomposable into the basis");
  }
  for (const auto& s : step) expand(s, basis, keep_ccx, depth + 1, out);
}

}  // namespace

std::vector<Instruction> textbook_ccx(int a, int b, int c) {
  std::vector<Instruction> out;
  const double t = kPi / 4;
  push_h(out, c);
  push_cx(out, b, c);
  push_rz(out, c, -t);
  push_cx(out, a, c);
  push_rz(out, c, t);
  push_cx(out, b, c);
  push_rz(out, c, -t);
  push_cx(out, a, c);
  push_rz(out, b, t);
  push_rz(out, c, t);
  push_h(out, c);
  push_cx(out, a, b);
  push_rz(out, a, t);
  push_rz(out, b, -t);
  push_cx(out, a, b);
  return out;
}

std::vector<Instruction> linear_ccx(int c0, int c1, int target, int middle) {
  std::array<int, 3> ops{c0, c1, target};
  int ends[2];
  int k = 0;
  for (int q : ops) {
    if (q != middle) {
      if (k == 2) throw ValidationError("linear_ccx: middle qubit is not an operand");
      ends[k++] = q;
    }
  }
  if (k != 2) throw ValidationError("linear_ccx: middle qubit is not an operand");

  // Wires: 0 = ends[0], 1 = middle, 2 = ends[1]; parity masks over the same order.
  const std::array<int, 3> wire{ends[0], middle, ends[1]};
  std::array<int, 3> parity{1, 2, 4};
  bool done[8] = {};
  std::vector<Instruction> out;
  const double t = kPi / 4;
  auto phase_for = [&](int w) {
    const int p = parity[w];
    if (done[p]) return;
    done[p] = true;
    const int weight = __builtin_popcount(p);
    push_rz(out, wire[w], weight == 2 ? -t : t);
  };

  push_h(out, target);
  for (int w = 0; w < 3; ++w) phase_for(w);
  // CX(middle -> end0), CX(end1 -> middle), repeated four times, visits every
  // two- and three-way parity and returns the wires to the identity.
  for (int rep = 0; rep < 4; ++rep) {
    push_cx(out, wire[1], wire[0]);
    parity[0] ^= parity[1];
    phase_for(0);
    push_cx(out, wire[2], wire[1]);
    parity[1] ^= parity[2];
    phase_for(1);
  }
  push_h(out, target);
  return out;
}

Circuit decompose_to_basis(const Circuit& c, const std::set<Gate>& basis, bool keep_ccx) {
  std::vector<Instruction> out;
  out.reserve(c.size() * 2);
  for (const auto& ins : c.instructions()) {
    const std::size_t before = out.size();
    expand(ins, basis, keep_ccx, 0, out);
    // Preserve schedule annotations only for untouched instructions.
    if (out.size() - before != 1 || out.back().gate != ins.gate) {
      for (std::size_t i = before; i < out.size(); ++i) out[i].start.reset();
    }
  }
  Circuit result(c.num_qubits(), c.num_clbits());
  result.set_instructions(std::move(out));
  if (c.initial_layout() && c.final_layout()) result.set_layouts(*c.initial_layout(), *c.final_layout());
  return result;
}

}  // namespace qps
