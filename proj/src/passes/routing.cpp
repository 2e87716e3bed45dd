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

#include "qps/passes/routing.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "qps/error.hpp"
#include "qps/util/random.hpp"
#include "route_util.hpp"

namespace qps {

using detail::Frontier;
using detail::RouteBuilder;
using detail::Swap;

namespace {

void check_layout(const Circuit& c, const Layout& l, const DeviceModel& d) {
  detail::check_fits(c, d);
  if (l.num_virtual() != c.num_qubits() || l.num_physical() != d.num_qubits()) {
    throw PassError("layout does not match the circuit and device sizes");
  }
}

auto runnable(const DeviceModel& d, const RouteBuilder& b) {
  return [&d, &b](const Instruction& ins) { return detail::executable(d, detail::positions(ins, b.layout())); };
}

auto emitter(RouteBuilder& b) {
  return [&b](const Instruction& ins) { b.emit(ins); };
}

// Physical position of v once physical p and q have been exchanged.
int swapped_pos(const Layout& l, int v, int p, int q) {
  const int x = l.phys(v);
  if (x == p) return q;
  if (x == q) return p;
  return x;
}

double cost_after(const DeviceModel& d, const Frontier& f, const std::vector<int>& gates, const Layout& l, int p,
                  int q) {
  double sum = 0;
  std::vector<int> phys;
  for (int g : gates) {
    phys.clear();
    for (int v : f.instruction(g).qubits) phys.push_back(swapped_pos(l, v, p, q));
    sum += detail::gate_cost(d, phys);
  }
  return sum;
}

// Edges with an endpoint holding an operand of a front gate, sorted.
std::vector<Swap> candidate_swaps(const DeviceModel& d, const Frontier& f, const std::vector<int>& front,
                                  const Layout& l) {
  std::vector<Swap> out;
  for (int g : front) {
    for (int v : f.instruction(g).qubits) {
      const int p = l.phys(v);
      for (int n : d.neighbors(p)) out.push_back(edge_key(p, n));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int count_swaps(const Circuit& c) {
  int n = 0;
  for (const auto& ins : c.instructions()) n += ins.gate == Gate::SWAP;
  return n;
}

Circuit route_basic(const Circuit& c, const Layout& l, const DeviceModel& d) {
  check_layout(c, l, d);
  RouteBuilder b(d, l, c.num_clbits());
  for (const Instruction& ins : c.instructions()) {
    if (!Frontier::multi_qubit(ins) || detail::executable(d, detail::positions(ins, b.layout()))) {
      b.emit(ins);
      continue;
    }
    const std::vector<Swap> swaps = detail::gather_swaps(d, detail::positions(ins, b.layout()));
    b.apply(swaps);
    b.emit(ins);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) b.swap(it->first, it->second);
  }
  return b.finish();
}

Circuit route_stochastic(const Circuit& c, const Layout& l, const DeviceModel& d, std::uint64_t seed,
                         int max_trials) {
  check_layout(c, l, d);
  if (max_trials < 1) throw PassError("stochastic routing needs at least one trial");
  const int n = d.num_qubits();
  Rng rng(seed);
  RouteBuilder b(d, l, c.num_clbits());
  Frontier f(c);
  std::vector<double> weight(static_cast<std::size_t>(n) * n);
  std::vector<int> phys;

  while (true) {
    f.advance(runnable(d, b), emitter(b));
    if (f.done()) break;
    const std::vector<int> front = f.blocked();

    std::optional<std::vector<Swap>> best;
    for (int trial = 0; trial < max_trials; ++trial) {
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          const double w = d.distance(i, j) * (1.0 + uniform01(rng) / n);
          weight[i * n + j] = weight[j * n + i] = w;
        }
      }
      auto cost = [&](const Layout& lay) {
        double sum = 0;
        for (int g : front) {
          const auto& qs = f.instruction(g).qubits;
          if (qs.size() == 2) {
            sum += weight[lay.phys(qs[0]) * n + lay.phys(qs[1])];
            continue;
          }
          double m = std::numeric_limits<double>::max();
          for (int x : qs) {
            double s = 0;
            for (int o : qs)
              if (o != x) s += weight[lay.phys(x) * n + lay.phys(o)];
            m = std::min(m, s);
          }
          sum += m;
        }
        return sum;
      };
      auto satisfied = [&](const Layout& lay) {
        for (int g : front) {
          if (!detail::executable(d, detail::positions(f.instruction(g), lay))) return false;
        }
        return true;
      };

      Layout lay = b.layout();
      std::vector<Swap> swaps;
      bool ok = satisfied(lay);
      for (int layer = 0; !ok && layer < 2 * n; ++layer) {
        std::vector<bool> used(n, false);
        bool any = false;
        double current = cost(lay);
        while (true) {
          Swap pick{-1, -1};
          double pick_cost = current;
          for (const Edge& e : d.edges()) {
            if (used[e.first] || used[e.second]) continue;
            lay.swap_physical(e.first, e.second);
            const double after = cost(lay);
            lay.swap_physical(e.first, e.second);
            if (after < pick_cost - 1e-12) {
              pick_cost = after;
              pick = e;
            }
          }
          if (pick.first < 0) break;
          lay.swap_physical(pick.first, pick.second);
          used[pick.first] = used[pick.second] = true;
          swaps.push_back(pick);
          current = pick_cost;
          any = true;
        }
        if (!any) break;
        ok = satisfied(lay);
      }
      if (ok && (!best || swaps.size() < best->size())) best = std::move(swaps);
    }

    if (best) {
      b.apply(*best);
    } else {
      b.apply(detail::gather_swaps(d, detail::positions(f.instruction(front.front()), b.layout())));
    }
    if (f.advance(runnable(d, b), emitter(b)) == 0 && !f.done()) {
      throw PassError("stochastic routing exhausted its trial budget");
    }
  }
  return b.finish();
}

Circuit route_sabre(const Circuit& c, const Layout& l, const DeviceModel& d, std::uint64_t seed,
                    const SabreConfig& cfg) {
  check_layout(c, l, d);
  Rng rng(seed);
  RouteBuilder b(d, l, c.num_clbits());
  Frontier f(c);
  std::vector<double> decay(d.num_qubits(), 1.0);
  const double step = 1.0 - cfg.decay;
  int stall = 0;

  while (true) {
    if (f.advance(runnable(d, b), emitter(b)) > 0) {
      std::fill(decay.begin(), decay.end(), 1.0);
      stall = 0;
    }
    if (f.done()) break;
    const std::vector<int> front = f.blocked();
    if (stall >= cfg.stall_limit) {
      b.apply(detail::gather_swaps(d, detail::positions(f.instruction(front.front()), b.layout())));
      std::fill(decay.begin(), decay.end(), 1.0);
      stall = 0;
      continue;
    }
    const std::vector<int> ahead = f.lookahead(front, cfg.lookahead);
    const std::vector<Swap> cands = candidate_swaps(d, f, front, b.layout());
    double best = std::numeric_limits<double>::max();
    std::vector<Swap> ties;
    for (auto [p, q] : cands) {
      double score = cost_after(d, f, front, b.layout(), p, q);
      if (!ahead.empty()) score += cfg.lookahead_weight * cost_after(d, f, ahead, b.layout(), p, q);
      score *= std::max(decay[p], decay[q]);
      if (score < best - 1e-12) {
        best = score;
        ties.assign(1, {p, q});
      } else if (score <= best + 1e-12) {
        ties.emplace_back(p, q);
      }
    }
    const Swap pick = ties[uniform_index(rng, ties.size())];
    b.swap(pick.first, pick.second);
    decay[pick.first] += step;
    decay[pick.second] += step;
    ++stall;
  }
  return b.finish();
}

Circuit route_lookahead(const Circuit& c, const Layout& l, const DeviceModel& d, const SabreConfig& cfg) {
  check_layout(c, l, d);
  RouteBuilder b(d, l, c.num_clbits());
  Frontier f(c);
  int stall = 0;
  double last_front = std::numeric_limits<double>::max();
  while (true) {
    if (f.advance(runnable(d, b), emitter(b)) > 0) {
      stall = 0;
      last_front = std::numeric_limits<double>::max();
    }
    if (f.done()) break;
    const std::vector<int> front = f.blocked();
    const std::vector<int> ahead = f.lookahead(front, cfg.lookahead);
    Swap pick{-1, -1};
    std::pair<double, double> best{std::numeric_limits<double>::max(), 0};
    for (auto [p, q] : candidate_swaps(d, f, front, b.layout())) {
      const std::pair<double, double> score{cost_after(d, f, front, b.layout(), p, q),
                                            cost_after(d, f, ahead, b.layout(), p, q)};
      if (score < best) {
        best = score;
        pick = {p, q};
      }
    }
    if (best.first < last_front) {
      stall = 0;
    } else if (++stall >= cfg.stall_limit) {
      throw PassError("lookahead routing stopped making progress");
    }
    last_front = std::min(last_front, best.first);
    b.swap(pick.first, pick.second);
  }
  return b.finish();
}

}  // namespace qps
