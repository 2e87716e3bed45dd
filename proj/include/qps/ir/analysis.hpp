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
#include <vector>

#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"

namespace qps {

struct CircuitStats {
  int depth = 0;
  int total_gates = 0;
  int cx_count = 0;
  /// RZ gates whose angle is not a multiple of pi/2.
  int non_clifford = 0;

  bool operator==(const CircuitStats&) const = default;
};

/// Depth is the longest dependency chain; barriers and delays are ignored
/// and do not count as gates.
CircuitStats circuit_stats(const Circuit& c);

/// Qubits touched by anything other than a barrier, ascending.
std::vector<int> active_qubits(const Circuit& c);

struct Violation {
  enum class Kind { UncoupledGate, NonBasisGate, QubitOutOfRange };
  Kind kind;
  std::size_t index;
  std::string message;
};

/// Every multi-qubit gate off the coupling graph and every gate outside the
/// device basis. An empty report means the circuit is executable.
std::vector<Violation> validate(const Circuit& c, const DeviceModel& d);

}  // namespace qps
