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
#include <optional>
#include <string_view>

namespace qps {

/// Instruction tags understood by every stage of the toolchain.
enum class Gate : std::uint8_t {
  I,
  X,
  SX,
  H,
  S,
  Z,
  RZ,
  CX,
  CCX,
  SWAP,
  Measure,
  Delay,
  Barrier,
};

inline constexpr int kNumGateKinds = 13;

/// Lower-case OpenQASM spelling ("id", "x", "sx", ...).
std::string_view gate_name(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);

/// Number of qubit operands; 0 means "any positive count" (barrier).
int gate_arity(Gate g);

/// Unitary one-qubit gates (everything fusion may touch).
inline bool is_single_qubit_unitary(Gate g) {
  switch (g) {
    case Gate::I:
    case Gate::X:
    case Gate::SX:
    case Gate::H:
    case Gate::S:
    case Gate::Z:
    case Gate::RZ:
      return true;
    default:
      return false;
  }
}

/// Measure, delay and barrier are not gates in the basis sense and are always
/// executable.
inline bool is_directive(Gate g) { return g == Gate::Measure || g == Gate::Delay || g == Gate::Barrier; }

}  // namespace qps
