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

#include "qps/passes/fusion.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace qps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-12;

Instruction rz(int q, double theta) {
  double t = canonical_angle(theta);
  if (is_clifford_angle(t)) t = quarter_turns(t) * kPi / 2;
  return make_rz(q, t);
}

bool negligible(double theta) {
  const double t = canonical_angle(theta);
  return t < 1e-12 || 2 * kPi - t < 1e-12;
}

void push_rz(std::vector<Instruction>& out, int q, double theta) {
  if (!negligible(theta)) out.push_back(rz(q, theta));
}

}  // namespace

std::vector<Instruction> synthesize_1q(const Mat2<double>& u, int q) {
  std::vector<Instruction> out;
  const double a00 = std::abs(u(0, 0));
  const double a01 = std::abs(u(0, 1));
  if (a01 < kEps) {
    push_rz(out, q, std::arg(u(1, 1)) - std::arg(u(0, 0)));
    return out;
  }
  if (a00 < kEps) {
    push_rz(out, q, std::arg(u(0, 1)) - std::arg(u(1, 0)));
    out.push_back(make_gate(Gate::X, {q}));
    return out;
  }
  const double theta = 2 * std::atan2(std::abs(u(1, 0)), a00);
  const double phi = std::arg(u(1, 0)) - std::arg(u(0, 0));
  const double lam = std::arg(-u(0, 1)) - std::arg(u(0, 0));
  if (std::abs(a00 - a01) < kEps) {
    push_rz(out, q, lam - kPi / 2);
    out.push_back(make_gate(Gate::SX, {q}));
    push_rz(out, q, phi + kPi / 2);
    return out;
  }
  push_rz(out, q, lam);
  out.push_back(make_gate(Gate::SX, {q}));
  push_rz(out, q, theta + kPi);
  out.push_back(make_gate(Gate::SX, {q}));
  push_rz(out, q, phi + kPi);
  return out;
}

Circuit fuse_single_qubit(const Circuit& c) {
  std::vector<std::vector<Instruction>> runs(c.num_qubits());
  std::vector<Instruction> out;
  out.reserve(c.size());
  auto flush = [&](int q) {
    auto& run = runs[q];
    if (run.empty()) return;
    Mat2<double> u = Mat2<double>::Identity();
    for (const auto& g : run) u = single_qubit_matrix<double>(g.gate, g.angle) * u;
    auto fused = synthesize_1q(u, q);
    if (fused.size() < run.size()) {
      out.insert(out.end(), fused.begin(), fused.end());
    } else {
      for (auto& g : run) {
        g.start.reset();
        out.push_back(g);
      }
    }
    run.clear();
  };
  for (const auto& ins : c.instructions()) {
    if (is_single_qubit_unitary(ins.gate)) {
      runs[ins.qubits[0]].push_back(ins);
      continue;
    }
    for (int q : ins.qubits) flush(q);
    Instruction copy = ins;
    copy.start.reset();
    out.push_back(copy);
  }
  for (int q = 0; q < c.num_qubits(); ++q) flush(q);
  Circuit result(c.num_qubits(), c.num_clbits());
  result.set_instructions(std::move(out));
  return result;
}

Circuit defer_measurements(const Circuit& c) {
  std::vector<Instruction> body;
  std::vector<Instruction> tail;
  for (const auto& ins : c.instructions()) (ins.gate == Gate::Measure ? tail : body).push_back(ins);
  body.insert(body.end(), tail.begin(), tail.end());
  Circuit result(c.num_qubits(), c.num_clbits());
  result.set_instructions(std::move(body));
  if (c.initial_layout() && c.final_layout()) result.set_layouts(*c.initial_layout(), *c.final_layout());
  return result;
}

}  // namespace qps
