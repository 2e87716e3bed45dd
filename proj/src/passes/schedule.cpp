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

#include "qps/passes/schedule.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "qps/error.hpp"

namespace qps {

namespace {

Time duration_of(const Instruction& ins, const DeviceModel& d) {
  const auto t = d.durations().of(ins);
  if (!t) throw PassError("no duration for gate '" + std::string(gate_name(ins.gate)) + "'");
  return *t;
}

}  // namespace

Time makespan(const Circuit& c) {
  Time end = 0;
  for (const auto& ins : c.instructions()) {
    if (ins.start) end = std::max(end, *ins.start + ins.duration);
  }
  return end;
}

Circuit schedule(const Circuit& c, const DeviceModel& d, Scheduler policy) {
  std::vector<Instruction> out = c.instructions();
  std::vector<Time> ready(c.num_qubits(), 0);
  Time total = 0;
  for (auto& ins : out) {
    ins.duration = duration_of(ins, d);
    Time start = 0;
    for (int q : ins.qubits) start = std::max(start, ready[q]);
    ins.start = start;
    for (int q : ins.qubits) ready[q] = start + ins.duration;
    total = std::max(total, start + ins.duration);
  }
  if (policy == Scheduler::Alap) {
    std::vector<Time> latest(c.num_qubits(), total);
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      Time end = total;
      for (int q : it->qubits) end = std::min(end, latest[q]);
      it->start = end - it->duration;
      for (int q : it->qubits) latest[q] = *it->start;
    }
  }
  Circuit result(c.num_qubits(), c.num_clbits());
  result.set_instructions(std::move(out));
  if (c.initial_layout() && c.final_layout()) result.set_layouts(*c.initial_layout(), *c.final_layout());
  return result;
}

Circuit apply_dd(const Circuit& c, const DeviceModel& d) {
  if (!c.is_scheduled()) throw PassError("dynamical decoupling needs a scheduled circuit");
  const Time pulse = d.durations().single_qubit;
  const auto& ins = c.instructions();
  std::vector<int> last(c.num_qubits(), -1);
  std::map<int, std::vector<Instruction>> before;
  for (std::size_t i = 0; i < ins.size(); ++i) {
    for (int q : ins[i].qubits) {
      const int prev = last[q];
      last[q] = static_cast<int>(i);
      if (prev < 0) continue;
      const Time from = *ins[prev].start + ins[prev].duration;
      const Time window = *ins[i].start - from;
      if (window < 2 * pulse + 2) continue;
      const Time rest = window - 2 * pulse;
      const Time a = rest / 4;
      const Time b = rest / 2;
      const Time e = rest - a - b;
      auto& block = before[static_cast<int>(i)];
      Time t = from;
      auto push = [&](Instruction g) {
        g.start = t;
        if (g.gate == Gate::X) g.duration = pulse;
        t += g.duration;
        block.push_back(std::move(g));
      };
      if (a > 0) push(make_delay(q, a));
      push(make_gate(Gate::X, {q}));
      push(make_delay(q, b));
      push(make_gate(Gate::X, {q}));
      if (e > 0) push(make_delay(q, e));
    }
  }
  if (before.empty()) return c;
  std::vector<Instruction> out;
  out.reserve(ins.size() + 5 * before.size());
  for (std::size_t i = 0; i < ins.size(); ++i) {
    auto it = before.find(static_cast<int>(i));
    if (it != before.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    out.push_back(ins[i]);
  }
  Circuit result(c.num_qubits(), c.num_clbits());
  result.set_instructions(std::move(out));
  if (c.initial_layout() && c.final_layout()) result.set_layouts(*c.initial_layout(), *c.final_layout());
  return result;
}

}  // namespace qps
