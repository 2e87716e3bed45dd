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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"

namespace qps {

enum class Family { Bv, Ghz, Qaoa, Adder, Cnx, CnxDirty, Pea };

std::string_view family_name(Family f);

/// Benchmark family plus its size parameters. `qubits` is the total width;
/// the other fields are family specific and fall back to defaults.
struct BenchmarkSpec {
  Family family = Family::Ghz;
  int qubits = 0;
  /// bv: secret, MSB first; empty means all ones.
  std::string secret;
  /// qaoa: graph over the qubits; empty means a ring.
  std::vector<Edge> graph;
  double gamma = 0.8;
  double beta = 0.4;
  int layers = 1;
  /// adder: operands; negative means all ones for a and 1 for b.
  long long a = -1;
  long long b = -1;
  /// pea: eigenphase as a fraction of a full turn.
  double phase = 0.3125;

  /// Canonical short name, e.g. "bv5", "ghz12".
  std::string name() const;
};

/// Parses "<family><qubits>", e.g. "ghz12", "cnxdirty7".
std::optional<BenchmarkSpec> parse_benchmark_name(std::string_view name);

/// Builds the circuit, measured into a classical register. Throws
/// ValidationError for sizes the family does not support.
///  bv     Bernstein-Vazirani with one ancilla; the ideal outcome is the secret.
///  ghz    H and a CX chain.
///  qaoa   MaxCut ansatz: ZZ phases on graph edges, RX mixers.
///  adder  Cuccaro ripple-carry adder on (qubits - 2) / 2 bit operands.
///  cnx    X controlled by (qubits + 1) / 2 set controls with clean ancillas.
///  cnxdirty  same control count, borrowed ancillas left in place.
///  pea    phase estimation of a phase gate with qubits - 1 counting qubits.
Circuit gen_benchmark(const BenchmarkSpec& spec);

}  // namespace qps
