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

#include <vector>

#include "qps/ir/circuit.hpp"
#include "qps/linalg/gates.hpp"

namespace qps {

/// Shortest {RZ, SX, X} sequence (time order) equal to u up to global phase:
/// none or one RZ for diagonal u, RZ X for anti-diagonal, RZ SX RZ when
/// |u00| = |u01|, RZ SX RZ SX RZ otherwise.
std::vector<Instruction> synthesize_1q(const Mat2<double>& u, int q);

/// Merges each maximal run of one-qubit unitaries on a qubit into its
/// synthesized form when that is strictly shorter; identity runs vanish.
/// Multi-qubit gates and directives end a run.
Circuit fuse_single_qubit(const Circuit& c);

/// Moves every measurement to the end, keeping their relative order.
Circuit defer_measurements(const Circuit& c);

}  // namespace qps
