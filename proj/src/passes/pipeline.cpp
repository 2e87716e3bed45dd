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

#include "qps/passes/pipeline.hpp"

#include "qps/error.hpp"
#include "qps/ir/decompose.hpp"
#include "qps/passes/fusion.hpp"
#include "qps/passes/mapping.hpp"
#include "qps/passes/routing.hpp"
#include "qps/passes/schedule.hpp"
#include "qps/util/random.hpp"

namespace qps {

namespace {

Circuit with_layouts(std::vector<Instruction> instrs, const Circuit& like) {
  Circuit out(like.num_qubits(), like.num_clbits());
  out.set_instructions(std::move(instrs));
  if (like.initial_layout() && like.final_layout()) out.set_layouts(*like.initial_layout(), *like.final_layout());
  return out;
}

}  // namespace

Circuit expand_deferred_ccx(const Circuit& c, const DeviceModel& d) {
  std::vector<Instruction> out;
  out.reserve(c.size());
  for (const auto& ins : c.instructions()) {
    if (ins.gate != Gate::CCX) {
      out.push_back(ins);
      continue;
    }
    const auto& q = ins.qubits;
    const bool ab = d.coupled(q[0], q[1]);
    const bool ac = d.coupled(q[0], q[2]);
    const bool bc = d.coupled(q[1], q[2]);
    std::vector<Instruction> rep;
    if (ab && ac && bc) {
      rep = textbook_ccx(q[0], q[1], q[2]);
    } else if (ab && ac) {
      rep = linear_ccx(q[0], q[1], q[2], q[0]);
    } else if (ab && bc) {
      rep = linear_ccx(q[0], q[1], q[2], q[1]);
    } else if (ac && bc) {
      rep = linear_ccx(q[0], q[1], q[2], q[2]);
    } else {
      throw PassError("three-qubit gate on disconnected physical qubits");
    }
    out.insert(out.end(), rep.begin(), rep.end());
  }
  return with_layouts(std::move(out), c);
}

Circuit run_pipeline(const Circuit& c, const DeviceModel& d, const PassCombination& p, std::uint64_t seed,
                     const PipelineConfig& cfg) {
  if (c.num_qubits() > d.num_qubits()) {
    throw PassError("circuit needs " + std::to_string(c.num_qubits()) + " qubits but the device has " +
                    std::to_string(d.num_qubits()));
  }
  Circuit virt = defer_measurements(fuse_single_qubit(c));
  if (!p.trios) {
    std::vector<Instruction> out;
    for (const auto& ins : virt.instructions()) {
      if (ins.gate == Gate::CCX) {
        auto rep = textbook_ccx(ins.qubits[0], ins.qubits[1], ins.qubits[2]);
        out.insert(out.end(), rep.begin(), rep.end());
      } else {
        out.push_back(ins);
      }
    }
    virt = with_layouts(std::move(out), virt);
  }

  const std::uint64_t map_seed = derive_seed(seed, 1);
  const std::uint64_t route_seed = derive_seed(seed, 2);
  Layout layout;
  switch (p.mapper) {
    case Mapper::Trivial: layout = map_trivial(virt, d); break;
    case Mapper::Dense: layout = map_dense(virt, d); break;
    case Mapper::NoiseAdaptive: layout = map_noise_adaptive(virt, d); break;
    case Mapper::Sabre: layout = map_sabre(virt, d, map_seed, cfg.sabre); break;
  }
  Circuit phys;
  switch (p.router) {
    case Router::Basic: phys = route_basic(virt, layout, d); break;
    case Router::Stochastic: phys = route_stochastic(virt, layout, d, route_seed, cfg.stochastic_trials); break;
    case Router::Sabre: phys = route_sabre(virt, layout, d, route_seed, cfg.sabre); break;
    case Router::Lookahead: phys = route_lookahead(virt, layout, d, cfg.sabre); break;
  }
  if (p.trios) phys = expand_deferred_ccx(phys, d);
  phys = decompose_to_basis(phys, d.basis(), false);
  phys = schedule(phys, d, p.scheduler);
  if (p.dd) phys = apply_dd(phys, d);
  return phys;
}

}  // namespace qps
