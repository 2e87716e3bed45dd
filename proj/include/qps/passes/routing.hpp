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

// Every router returns a circuit over the device qubits carrying the initial
// and final layouts. Measurements are moved to the end and read the physical
// qubit holding their virtual qubit at that point, so classical outcomes are
// unaffected by the permutation. CCX counts as executable once its three
// physical qubits form a connected subgraph.

/// Brings each distant pair together along the lexicographically smallest
/// shortest path, then undoes the SWAPs. The final layout equals the initial one.
Circuit route_basic(const Circuit& c, const Layout& l, const DeviceModel& d);

/// Randomized layers of distance-reducing SWAPs; the cheapest of max_trials
/// attempts is kept for each blocked front layer. Throws PassError when the
/// front layer cannot be satisfied.
Circuit route_stochastic(const Circuit& c, const Layout& l, const DeviceModel& d, std::uint64_t seed,
                         int max_trials = 64);

/// Front-layer plus lookahead SWAP heuristic with decay.
Circuit route_sabre(const Circuit& c, const Layout& l, const DeviceModel& d, std::uint64_t seed,
                    const SabreConfig& cfg = {});

/// Deterministic greedy SWAP search over front and next-layer distances.
/// Gives up with PassError when the front stops improving.
Circuit route_lookahead(const Circuit& c, const Layout& l, const DeviceModel& d, const SabreConfig& cfg = {});

/// Number of SWAP instructions in c.
int count_swaps(const Circuit& c);

}  // namespace qps
