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
#include <set>

#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"
#include "qps/passes/combination.hpp"

namespace qps {

/// Replaces every CCX of a routed physical circuit: the 6-CX form when its
/// qubits form a triangle, the 8-CX nearest-neighbour form on a path.
Circuit expand_deferred_ccx(const Circuit& c, const DeviceModel& d);

/// 1q fusion, measurement deferral, CCX decomposition (skipped under
/// trios), mapping, routing, basis translation, scheduling and optional
/// dynamical decoupling. The output passes validate() and depends only on
/// the arguments.
Circuit run_pipeline(const Circuit& c, const DeviceModel& d, const PassCombination& p, std::uint64_t seed,
                     const PipelineConfig& cfg = {});

}  // namespace qps
