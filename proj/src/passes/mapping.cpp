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

#include "qps/passes/mapping.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "qps/error.hpp"
#include "qps/passes/routing.hpp"
#include "qps/util/random.hpp"
#include "route_util.hpp"

namespace qps {

namespace {

// Interaction counts per unordered virtual pair; three-qubit gates count
// every pair they touch.
std::map<Edge, int> interactions(const Circuit& c) {
  std::map<Edge, int> out;
  for (const auto& ins : c.instructions()) {
    if (!detail::Frontier::multi_qubit(ins)) continue;
    for (std::size_t i = 0; i < ins.qubits.size(); ++i)
      for (std::size_t j = i + 1; j < ins.qubits.size(); ++j) ++out[edge_key(ins.qubits[i], ins.qubits[j])];
  }
  return out;
}

// Stable order of indices by descending key, lowest index first on ties.
std::vector<int> by_descending(const std::vector<int>& key) {
  std::vector<int> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] > key[b]; });
  return order;
}

// Routing-only view: multi-qubit gates of c in program order.
Circuit gate_skeleton(const Circuit& c, bool reversed) {
  std::vector<Instruction> gates;
  for (const auto& ins : c.instructions()) {
    if (detail::Frontier::multi_qubit(ins)) gates.push_back(make_gate(ins.gate, ins.qubits));
  }
  if (reversed) std::reverse(gates.begin(), gates.end());
  Circuit out(c.num_qubits(), 0);
  out.set_instructions(std::move(gates));
  return out;
}

}  // namespace

Layout map_trivial(const Circuit& c, const DeviceModel& d) {
  detail::check_fits(c, d);
  return Layout::identity(c.num_qubits(), d.num_qubits());
}

Layout map_dense(const Circuit& c, const DeviceModel& d) {
  detail::check_fits(c, d);
  const int n = d.num_qubits();
  const int k = c.num_qubits();
  if (k == 0) return Layout({}, n);

  int seed = 0;
  for (int p = 1; p < n; ++p) {
    if (d.neighbors(p).size() > d.neighbors(seed).size()) seed = p;
  }
  std::vector<bool> in(n, false);
  std::vector<int> chosen{seed};
  in[seed] = true;
  while (static_cast<int>(chosen.size()) < k) {
    int pick = -1;
    int pick_links = -1;
    for (int p = 0; p < n; ++p) {
      if (in[p]) continue;
      int links = 0;
      for (int v : d.neighbors(p)) links += in[v];
      if (links > 0 && links > pick_links) {
        pick = p;
        pick_links = links;
      }
    }
    in[pick] = true;
    chosen.push_back(pick);
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<int> internal(chosen.size(), 0);
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (int v : d.neighbors(chosen[i])) internal[i] += in[v];
  std::vector<int> activity(k, 0);
  for (const auto& [pair, count] : interactions(c)) {
    activity[pair.first] += count;
    activity[pair.second] += count;
  }
  const std::vector<int> node_order = by_descending(internal);
  const std::vector<int> virt_order = by_descending(activity);
  std::vector<int> v2p(k);
  for (int i = 0; i < k; ++i) v2p[virt_order[i]] = chosen[node_order[i]];
  return Layout(std::move(v2p), n);
}

Layout map_noise_adaptive(const Circuit& c, const DeviceModel& d) {
  detail::check_fits(c, d);
  const int n = d.num_qubits();
  const int k = c.num_qubits();
  const std::map<Edge, int> counts = interactions(c);
  std::vector<std::pair<Edge, int>> pairs(counts.begin(), counts.end());
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

  std::vector<int> v2p(k, -1);
  std::vector<bool> used(n, false);
  auto place = [&](int v, int p) {
    v2p[v] = p;
    used[p] = true;
  };
  // Lowest-error edge with both ends free; prefers edges touching placed nodes.
  auto best_free_edge = [&]() -> std::optional<Edge> {
    std::optional<Edge> best;
    bool best_adjacent = false;
    for (const Edge& e : d.edges()) {
      if (used[e.first] || used[e.second]) continue;
      bool adjacent = false;
      for (int p : {e.first, e.second})
        for (int v : d.neighbors(p)) adjacent = adjacent || used[v];
      if (!best || (adjacent && !best_adjacent) ||
          (adjacent == best_adjacent && d.cx_error(e.first, e.second) < d.cx_error(best->first, best->second))) {
        best = e;
        best_adjacent = adjacent;
      }
    }
    return best;
  };
  // Free neighbour of p with the lowest edge error, else the nearest free node.
  auto best_partner = [&](int p) {
    int pick = -1;
    for (int v : d.neighbors(p)) {
      if (used[v]) continue;
      if (pick == -1 || d.cx_error(p, v) < d.cx_error(p, pick)) pick = v;
    }
    if (pick != -1) return pick;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (pick == -1 || d.distance(p, v) < d.distance(p, pick)) pick = v;
    }
    return pick;
  };

  for (const auto& [pair, count] : pairs) {
    const auto [a, b] = pair;
    if (v2p[a] != -1 && v2p[b] != -1) continue;
    if (v2p[a] == -1 && v2p[b] == -1) {
      const auto e = best_free_edge();
      if (!e) break;
      place(a, e->first);
      place(b, e->second);
    } else if (v2p[a] == -1) {
      place(a, best_partner(v2p[b]));
    } else {
      place(b, best_partner(v2p[a]));
    }
  }

  std::vector<int> free_nodes;
  for (int p = 0; p < n; ++p)
    if (!used[p]) free_nodes.push_back(p);
  std::stable_sort(free_nodes.begin(), free_nodes.end(),
                   [&](int x, int y) { return d.readout_error(x) < d.readout_error(y); });
  std::size_t next = 0;
  for (int v = 0; v < k; ++v)
    if (v2p[v] == -1) place(v, free_nodes[next++]);
  return Layout(std::move(v2p), n);
}

Layout map_sabre(const Circuit& c, const DeviceModel& d, std::uint64_t seed, const SabreConfig& cfg) {
  detail::check_fits(c, d);
  const int n = d.num_qubits();
  Rng rng(seed);
  std::vector<int> phys(n);
  std::iota(phys.begin(), phys.end(), 0);
  shuffle_range(phys.begin(), phys.end(), rng);
  phys.resize(c.num_qubits());
  Layout layout(phys, n);

  const Circuit forward = gate_skeleton(c, false);
  const Circuit backward = gate_skeleton(c, true);
  Layout best = layout;
  int best_swaps = -1;
  for (int it = 0; it <= cfg.layout_iterations; ++it) {
    const Circuit routed = route_sabre(forward, layout, d, derive_seed(seed, 2 * it + 1), cfg);
    const int swaps = count_swaps(routed);
    if (best_swaps < 0 || swaps < best_swaps) {
      best_swaps = swaps;
      best = layout;
    }
    if (swaps == 0 || it == cfg.layout_iterations) break;
    layout = *route_sabre(backward, *routed.final_layout(), d, derive_seed(seed, 2 * it + 2), cfg).final_layout();
  }
  return best;
}

}  // namespace qps
