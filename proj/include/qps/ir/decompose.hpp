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

#include <set>
#include <vector>

#include "qps/ir/circuit.hpp"

namespace qps {

/// Rewrites every gate outside `basis` with fixed identities (H -> RZ SX RZ,
/// S -> RZ, SWAP -> 3 CX, CCX -> 6-CX Toffoli, ...), recursively.
/// With keep_ccx, CCX is passed through untouched. The result equals the input
/// up to global phase. Throws ValidationError when a gate cannot reach the basis.
Circuit decompose_to_basis(const Circuit& c, const std::set<Gate>& basis, bool keep_ccx);

/// Textbook Toffoli with 6 CX gates and T / T-dagger as RZ(+-pi/4).
/// Uses H, RZ and CX.
std::vector<Instruction> textbook_ccx(int c0, int c1, int target);

/// Toffoli for three qubits wired as a path end0 - middle - end1, using only
/// CX across the two path edges (8 CX, phase-polynomial CCZ between two H).
/// `middle` must be one of the operands.
std::vector<Instruction> linear_ccx(int c0, int c1, int target, int middle);

}  // namespace qps
