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

#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"
#include "qps/passes/combination.hpp"

namespace qps {

/// Virtual qubit i on physical qubit i.
Layout map_trivial(const Circuit& c, const DeviceModel& d);

/// Greedy densest connected subgraph grown from the highest-degree node.
/// Busier virtual qubits go to better-connected nodes of the subgraph.
Layout map_dense(const Circuit& c, const DeviceModel& d);

/// Places the most frequently interacting pairs on the lowest-error edges and
/// the rest on the lowest-readout-error nodes, using calibration rates only.
Layout map_noise_adaptive(const Circuit& c, const DeviceModel& d);

/// Random initial layout refined by alternating forward and reverse SABRE
/// routing; returns the candidate whose forward routing needs the fewest SWAPs.
Layout map_sabre(const Circuit& c, const DeviceModel& d, std::uint64_t seed, const SabreConfig& cfg = {});

}  // namespace qps
