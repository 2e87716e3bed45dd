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

#include <string>
#include <string_view>

#include "qps/ir/circuit.hpp"

namespace qps {

/// Parses the OpenQASM 2 subset: one qreg, at most one creg, gates
/// id/x/sx/h/s/z/rz(expr)/cx/ccx/swap, measure, delay(int), barrier.
/// Angle expressions may use pi, numeric literals, + - * / and parentheses.
/// Throws ParseError with the offending line and column.
Circuit parse_qasm(std::string_view text);

/// Writes text that parse_qasm reads back to a structurally equal circuit.
/// Start times and layouts are emitted as trailing comments.
std::string emit_qasm(const Circuit& c);

Circuit read_qasm_file(const std::string& path);

}  // namespace qps
