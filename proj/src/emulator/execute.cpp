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

#include "qps/emulator/execute.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "qps/clifford/simulate.hpp"
#include "qps/error.hpp"
#include "qps/ir/analysis.hpp"
#include "qps/linalg/statevector.hpp"
#include "qps/util/random.hpp"

namespace qps {

namespace {

using ShotRng = SplitMix64;

// Pauli codes: bit 0 = X part, bit 1 = Z part.
constexpr std::uint8_t kX = 1, kZ = 2;

struct Step {
  enum class Kind : std::uint8_t { Op, Pauli1, Depol2, Read };
  Kind kind = Kind::Op;
  const Instruction* ins = nullptr;
  int a = -1;
  int b = -1;
  /// Pauli1: cumulative X, X+Y, X+Y+Z. Depol2: p[0]. Read: p[0] = flip rate.
  double p[3] = {0, 0, 0};
  int clbit = -1;
};

struct Program {
  std::vector<Step> steps;
  std::vector<int> index;
  int active = 0;
  bool clifford = true;
};

bool clifford_op(const Instruction& ins) {
  switch (ins.gate) {
    case Gate::CCX: return false;
    case Gate::RZ: return is_clifford_angle(ins.angle);
    default: return true;
  }
}

Step pauli_channel(int q, double px, double py, double pz) {
  Step s;
  s.kind = Step::Kind::Pauli1;
  s.a = q;
  s.p[0] = px;
  s.p[1] = px + py;
  s.p[2] = px + py + pz;
  return s;
}

// Per-dt twirled amplitude/phase damping composed over `len` dt through the
// channel's Pauli eigenvalues.
Step idle_channel(int q, Time len, double t1, double t2) {
  const double rx = 1.0 / (4 * t1);
  const double rz = std::max(0.0, 1.0 / (2 * t2) - 1.0 / (4 * t1));
  const double lx = std::pow(1 - 2 * (rx + rz), static_cast<double>(len));
  const double lz = std::pow(1 - 4 * rx, static_cast<double>(len));
  const double pxy = (1 - lz) / 4;
  return pauli_channel(q, pxy, pxy, std::max(0.0, (1 - 2 * lx + lz) / 4));
}

Program compile(const Circuit& c, const DeviceModel& d, const NoiseParams& np, int epoch) {
  const auto violations = validate(c, d);
  if (!violations.empty()) throw ValidationError("circuit is not executable on the device: " + violations.front().message);
  if (!c.is_scheduled()) throw ValidationError("circuit must be scheduled before execution");
  if (c.num_clbits() > 64) throw SimulationError("execution is limited to 64 classical bits");

  Program prog;
  prog.index.assign(c.num_qubits(), -1);
  for (int q : active_qubits(c)) prog.index[q] = prog.active++;

  const double scale = np.drift_scale(epoch);
  const auto& ins = c.instructions();
  std::vector<std::size_t> last_write(c.num_clbits(), ins.size());
  for (std::size_t i = 0; i < ins.size(); ++i)
    if (ins[i].gate == Gate::Measure) last_write[ins[i].clbit] = i;

  std::vector<std::optional<Time>> busy(c.num_qubits());
  for (std::size_t i = 0; i < ins.size(); ++i) {
    const Instruction& in = ins[i];
    if (in.gate == Gate::Barrier || in.gate == Gate::Delay || in.gate == Gate::I) continue;
    for (int q : in.qubits) {
      if (np.idle && busy[q] && *in.start > *busy[q]) {
        prog.steps.push_back(idle_channel(prog.index[q], *in.start - *busy[q], d.t1(q), d.t2(q)));
      }
      busy[q] = *in.start + in.duration;
    }
    if (in.gate == Gate::Measure) {
      if (last_write[in.clbit] != i) continue;
      Step s;
      s.kind = Step::Kind::Read;
      s.a = prog.index[in.qubits[0]];
      s.p[0] = np.rates.readout_error.at(in.qubits[0]);
      s.clbit = in.clbit;
      prog.steps.push_back(s);
      continue;
    }
    prog.clifford = prog.clifford && clifford_op(in);
    Step op;
    op.ins = &in;
    op.a = prog.index[in.qubits[0]];
    if (in.qubits.size() > 1) op.b = prog.index[in.qubits[1]];
    prog.steps.push_back(op);
    if (in.gate == Gate::CX) {
      const auto it = np.rates.cx_error.find(edge_key(in.qubits[0], in.qubits[1]));
      const double p = std::min(1.0, (it == np.rates.cx_error.end() ? 0.0 : it->second) * scale);
      if (p > 0) {
        Step s;
        s.kind = Step::Kind::Depol2;
        s.a = op.a;
        s.b = op.b;
        s.p[0] = p;
        prog.steps.push_back(s);
      }
    } else if (in.qubits.size() == 1 && in.gate != Gate::RZ) {
      const double p = std::min(1.0, np.depol_1q * scale);
      if (p > 0) prog.steps.push_back(pauli_channel(op.a, p / 3, p / 3, p / 3));
    }
  }
  // Drop channels that can never fire.
  std::erase_if(prog.steps, [](const Step& s) {
    return (s.kind == Step::Kind::Pauli1 && s.p[2] <= 0) || (s.kind == Step::Kind::Depol2 && s.p[0] <= 0);
  });
  return prog;
}

// Samples a step's noise; returns the Pauli code (two codes packed for
// Depol2), 0 for none.
std::uint8_t sample_noise(const Step& s, ShotRng& rng) {
  const double u = uniform01(rng);
  if (s.kind == Step::Kind::Pauli1) {
    if (u < s.p[0]) return kX;
    if (u < s.p[1]) return kX | kZ;
    if (u < s.p[2]) return kZ;
    return 0;
  }
  if (u >= s.p[0]) return 0;
  return static_cast<std::uint8_t>(1 + uniform_index(rng, 15));
}

struct Frame {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  void flip(int q, std::uint8_t code) {
    x ^= std::uint64_t(code & kX) << q;
    z ^= std::uint64_t((code & kZ) >> 1) << q;
  }
  bool xbit(int q) const { return (x >> q) & 1; }
  static void swap_bit(std::uint64_t& w, int a, int b) {
    if (((w >> a) ^ (w >> b)) & 1) w ^= (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
  }
  void s(int q) { z ^= ((x >> q) & 1) << q; }

  void apply(const Step& st) {
    const int q = st.a;
    switch (st.ins->gate) {
      case Gate::H: {
        const std::uint64_t m = std::uint64_t(1) << q;
        const std::uint64_t dx = (x ^ z) & m;
        x ^= dx;
        z ^= dx;
        return;
      }
      case Gate::S: return s(q);
      case Gate::SX: x ^= ((z >> q) & 1) << q; return;
      case Gate::RZ:
        if (quarter_turns(st.ins->angle) % 2) s(q);
        return;
      case Gate::CX:
        x ^= ((x >> q) & 1) << st.b;
        z ^= ((z >> st.b) & 1) << q;
        return;
      case Gate::SWAP:
        swap_bit(x, q, st.b);
        swap_bit(z, q, st.b);
        return;
      default: return;
    }
  }
};

using MaskCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

bool readout_flip(const Step& s, ShotRng& rng) { return s.p[0] > 0 && uniform01(rng) < s.p[0]; }

// Terminal measurements make every noisy shot the ideal outcome xor the X
// part of the propagated error frame, so ideal sampling and frame
// propagation are independent.
MaskCounts run_clifford(const Circuit& c, const Program& prog, std::uint64_t shots, std::uint64_t seed) {
  if (prog.active > 64) throw SimulationError("Pauli-frame execution is limited to 64 active qubits");
  const AffineSupport support = stabilizer_support(c);
  const int rank = support.rank();
  const std::uint64_t coeff_mask = rank >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << rank) - 1;
  MaskCounts counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    ShotRng rng(derive_seed(seed, shot));
    std::uint64_t mask = support.element(rng() & coeff_mask);
    Frame f;
    for (const Step& s : prog.steps) {
      switch (s.kind) {
        case Step::Kind::Op: f.apply(s); break;
        case Step::Kind::Pauli1: f.flip(s.a, sample_noise(s, rng)); break;
        case Step::Kind::Depol2: {
          const std::uint8_t code = sample_noise(s, rng);
          f.flip(s.a, code & 3);
          f.flip(s.b, code >> 2);
          break;
        }
        case Step::Kind::Read:
          if (f.xbit(s.a) != readout_flip(s, rng)) mask ^= std::uint64_t(1) << s.clbit;
          break;
      }
    }
    ++counts[mask];
  }
  return counts;
}

struct Outcomes {
  std::vector<std::uint64_t> masks;
  std::vector<double> cdf;
};

using Pattern = std::vector<std::pair<std::uint32_t, std::uint8_t>>;

Outcomes simulate_pattern(const Program& prog, const Pattern& pattern) {
  StateVector<double> sv(prog.active);
  std::vector<int> qs;
  std::vector<std::pair<int, int>> reads;
  auto pauli = [&sv](int q, std::uint8_t code) {
    if (code & kZ) sv.apply_z(q);
    if (code & kX) sv.apply_x(q);
  };
  std::size_t next = 0;
  for (std::uint32_t i = 0; i < prog.steps.size(); ++i) {
    const Step& s = prog.steps[i];
    if (s.kind == Step::Kind::Op) {
      qs.clear();
      for (int q : s.ins->qubits) qs.push_back(prog.index[q]);
      sv.apply(*s.ins, qs);
    } else if (s.kind == Step::Kind::Read) {
      reads.emplace_back(s.a, s.clbit);
    } else if (next < pattern.size() && pattern[next].first == i) {
      const std::uint8_t code = pattern[next++].second;
      pauli(s.a, code & 3);
      if (s.kind == Step::Kind::Depol2) pauli(s.b, code >> 2);
    }
  }
  std::map<std::uint64_t, double> acc;
  const auto probs = sv.probabilities();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 1e-17) continue;
    std::uint64_t mask = 0;
    for (auto [q, cb] : reads)
      if ((i >> q) & 1) mask |= std::uint64_t(1) << cb;
    acc[mask] += probs[i];
  }
  Outcomes out;
  double total = 0;
  for (const auto& [mask, p] : acc) {
    total += p;
    out.masks.push_back(mask);
    out.cdf.push_back(total);
  }
  for (double& v : out.cdf) v /= total;
  return out;
}

MaskCounts run_trajectories(const Program& prog, std::uint64_t shots, std::uint64_t seed, const ExecuteOptions& opts) {
  if (prog.active > opts.max_statevector_qubits) {
    throw SimulationError("non-Clifford execution limited to " + std::to_string(opts.max_statevector_qubits) +
                          " active qubits, got " + std::to_string(prog.active));
  }
  const std::uint64_t traj = std::min<std::uint64_t>(shots, std::max(1, opts.trajectories));
  const std::uint64_t traj_seed = derive_seed(seed, ~std::uint64_t(0));
  std::map<Pattern, Outcomes> cache;
  MaskCounts counts;
  for (std::uint64_t t = 0; t < traj; ++t) {
    ShotRng rng(derive_seed(traj_seed, t));
    Pattern pattern;
    for (std::uint32_t i = 0; i < prog.steps.size(); ++i) {
      const Step& s = prog.steps[i];
      if (s.kind != Step::Kind::Pauli1 && s.kind != Step::Kind::Depol2) continue;
      if (const std::uint8_t code = sample_noise(s, rng)) pattern.emplace_back(i, code);
    }
    auto it = cache.find(pattern);
    if (it == cache.end()) it = cache.emplace(pattern, simulate_pattern(prog, pattern)).first;
    const Outcomes& o = it->second;
    for (std::uint64_t shot = t; shot < shots; shot += traj) {
      ShotRng srng(derive_seed(seed, shot));
      const double u = uniform01(srng);
      const auto k = std::min<std::size_t>(std::upper_bound(o.cdf.begin(), o.cdf.end(), u) - o.cdf.begin(),
                                           o.masks.size() - 1);
      std::uint64_t mask = o.masks[k];
      for (const Step& s : prog.steps)
        if (s.kind == Step::Kind::Read && readout_flip(s, srng)) mask ^= std::uint64_t(1) << s.clbit;
      ++counts[mask];
    }
  }
  return counts;
}

}  // namespace

Counts execute(const Circuit& c, const DeviceModel& d, const NoiseParams& np, std::uint64_t shots, std::uint64_t seed,
               int epoch, const ExecuteOptions& opts) {
  const Program prog = compile(c, d, np, epoch);
  const MaskCounts raw = prog.clifford ? run_clifford(c, prog, shots, seed) : run_trajectories(prog, shots, seed, opts);
  Counts out;
  for (const auto& [mask, n] : raw) out[format_mask(mask, c.num_clbits())] = n;
  return out;
}

Counts noise_model_predict(const Circuit& c, const DeviceModel& d, std::uint64_t shots, std::uint64_t seed,
                           const ExecuteOptions& opts) {
  return execute(c, d, NoiseParams::calibration(d), shots, seed, 0, opts);
}

double esp_predict(const Circuit& c, const DeviceModel& d) {
  if (!c.is_scheduled()) throw ValidationError("ESP needs a scheduled circuit");
  double r = 1.0;
  std::vector<bool> measured(c.num_qubits(), false);
  std::vector<Time> first(c.num_qubits(), -1), last(c.num_qubits(), 0);
  for (const auto& ins : c.instructions()) {
    if (ins.gate == Gate::Barrier) continue;
    if (ins.gate == Gate::CX) r *= 1.0 - d.cx_error(ins.qubits[0], ins.qubits[1]);
    if (ins.gate == Gate::Measure) measured[ins.qubits[0]] = true;
    for (int q : ins.qubits) {
      if (first[q] < 0) first[q] = *ins.start;
      last[q] = std::max(last[q], *ins.start + ins.duration);
    }
  }
  double decay = 0;
  for (int q = 0; q < c.num_qubits(); ++q) {
    if (measured[q]) r *= 1.0 - d.readout_error(q);
    if (first[q] >= 0) decay += static_cast<double>(last[q] - first[q]) * (1.0 / d.t1(q) + 1.0 / d.t2(q));
  }
  return r * std::exp(-decay);
}

}  // namespace qps
