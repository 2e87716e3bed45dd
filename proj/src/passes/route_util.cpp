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

#include "route_util.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "qps/error.hpp"

namespace qps::detail {

std::vector<int> shortest_path(const DeviceModel& d, int src, const std::vector<int>& targets,
                               const std::vector<bool>& blocked) {
  const int n = d.num_qubits();
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int t : targets) {
    if (dist[t] == -1) {
      dist[t] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : d.neighbors(u)) {
      if (dist[v] != -1 || (blocked[v] && v != src)) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  if (dist[src] == -1) return {};
  std::vector<int> path{src};
  int cur = src;
  while (dist[cur] > 0) {
    int next = -1;
    for (int v : d.neighbors(cur)) {
      if (dist[v] == dist[cur] - 1 && (next == -1 || v < next)) next = v;
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

std::vector<Swap> approach_swaps(const DeviceModel& d, int a, int b) {
  const std::vector<bool> none(d.num_qubits(), false);
  const std::vector<int> path = shortest_path(d, a, {b}, none);
  std::vector<Swap> out;
  for (std::size_t i = 0; i + 2 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  return out;
}

std::vector<int> positions(const Instruction& ins, const Layout& layout) {
  std::vector<int> out;
  out.reserve(ins.qubits.size());
  for (int v : ins.qubits) out.push_back(layout.phys(v));
  return out;
}

bool executable(const DeviceModel& d, const std::vector<int>& phys) {
  if (phys.size() == 2) return d.coupled(phys[0], phys[1]);
  int links = 0;
  for (std::size_t i = 0; i < phys.size(); ++i)
    for (std::size_t j = i + 1; j < phys.size(); ++j) links += d.coupled(phys[i], phys[j]);
  return links >= 2;
}

double gate_cost(const DeviceModel& d, const std::vector<int>& phys) {
  if (phys.size() == 2) return d.distance(phys[0], phys[1]);
  int best = std::numeric_limits<int>::max();
  for (int x : phys) {
    int sum = 0;
    for (int o : phys)
      if (o != x) sum += d.distance(x, o) - 1;
    best = std::min(best, sum);
  }
  return best + 1;
}

std::vector<Swap> gather_swaps(const DeviceModel& d, std::vector<int> phys) {
  if (phys.size() == 2) return approach_swaps(d, phys[0], phys[1]);
  // Centre: operand with the smallest gather cost, first in operand order on ties.
  int centre = 0;
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < 3; ++i) {
    int sum = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i) sum += d.distance(phys[i], phys[j]) - 1;
    if (sum < best) {
      best = sum;
      centre = i;
    }
  }
  std::vector<Swap> out;
  auto apply = [&](const std::vector<Swap>& swaps) {
    for (auto [p, q] : swaps) {
      out.emplace_back(p, q);
      for (int& x : phys) {
        if (x == p) {
          x = q;
        } else if (x == q) {
          x = p;
        }
      }
    }
  };
  const int first = centre == 0 ? 1 : 0;
  const int second = 3 - centre - first;
  apply(approach_swaps(d, phys[first], phys[centre]));
  if (executable(d, phys)) return out;

  std::vector<bool> blocked(d.num_qubits(), false);
  blocked[phys[centre]] = blocked[phys[first]] = true;
  std::vector<int> targets;
  for (int p : {phys[centre], phys[first]}) {
    for (int v : d.neighbors(p))
      if (!blocked[v]) targets.push_back(v);
  }
  std::sort(targets.begin(), targets.end());
  const std::vector<int> path = shortest_path(d, phys[second], targets, blocked);
  if (path.empty()) throw PassError("cannot gather the operands of a three-qubit gate");
  std::vector<Swap> moves;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) moves.emplace_back(path[i], path[i + 1]);
  apply(moves);
  return out;
}

Frontier::Frontier(const Circuit& c)
    : instrs_(&c.instructions()),
      num_qubits_(c.num_qubits()),
      per_qubit_(c.num_qubits()),
      head_(c.num_qubits(), 0),
      done_(c.size(), false),
      remaining_(c.size()) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int q : (*instrs_)[i].qubits) per_qubit_[q].push_back(static_cast<int>(i));
  }
}

bool Frontier::ready(int i) const {
  for (int q : (*instrs_)[i].qubits) {
    if (head_[q] >= per_qubit_[q].size() || per_qubit_[q][head_[q]] != i) return false;
  }
  return true;
}

void Frontier::retire(int i) {
  for (int q : (*instrs_)[i].qubits) ++head_[q];
  done_[i] = true;
  --remaining_;
  while (first_open_ < done_.size() && done_[first_open_]) ++first_open_;
}

std::vector<int> Frontier::blocked() const {
  std::vector<int> out;
  for (int q = 0; q < num_qubits_; ++q) {
    if (head_[q] >= per_qubit_[q].size()) continue;
    const int i = per_qubit_[q][head_[q]];
    if (ready(i) && multi_qubit((*instrs_)[i]) && (*instrs_)[i].qubits[0] == q) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Frontier::lookahead(const std::vector<int>& front, int count) const {
  std::vector<int> out;
  for (std::size_t i = first_open_; i < done_.size() && static_cast<int>(out.size()) < count; ++i) {
    if (done_[i] || !multi_qubit((*instrs_)[i])) continue;
    if (std::binary_search(front.begin(), front.end(), static_cast<int>(i))) continue;
    out.push_back(static_cast<int>(i));
  }
  return out;
}

void RouteBuilder::emit(const Instruction& ins) {
  Instruction p = ins;
  p.start.reset();
  if (ins.gate == Gate::Measure) {
    measures_.push_back(p);
    return;
  }
  for (int& q : p.qubits) q = layout_.phys(q);
  out_.push_back(std::move(p));
}

Circuit RouteBuilder::finish() {
  for (Instruction m : measures_) {
    m.qubits[0] = layout_.phys(m.qubits[0]);
    out_.push_back(std::move(m));
  }
  measures_.clear();
  Circuit c(num_physical_, num_clbits_);
  c.set_instructions(std::move(out_));
  c.set_layouts(initial_, layout_);
  return c;
}

void check_fits(const Circuit& c, const DeviceModel& d) {
  if (c.num_qubits() > d.num_qubits()) {
    throw PassError("circuit needs " + std::to_string(c.num_qubits()) + " qubits but the device has " +
                    std::to_string(d.num_qubits()));
  }
}

}  // namespace qps::detail
