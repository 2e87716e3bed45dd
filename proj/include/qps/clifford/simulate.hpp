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
#include <vector>

#include "qps/clifford/tableau.hpp"
#include "qps/ir/circuit.hpp"
#include "qps/ir/distribution.hpp"

namespace qps {

/// Outcome set offset + span(basis) over a classical register of at most 64
/// bits (bit c = clbit c). A Clifford circuit's outcomes are uniform over it.
class AffineSupport {
 public:
  AffineSupport() = default;
  AffineSupport(int width, std::uint64_t offset, std::vector<std::uint64_t> generators);

  int width() const { return width_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  std::uint64_t offset() const { return offset_; }
  /// Reduced basis: each vector has a distinct leading bit absent from the others.
  const std::vector<std::uint64_t>& basis() const { return basis_; }

  /// 2^rank, saturating at 2^63.
  std::uint64_t size() const;
  bool contains(std::uint64_t outcome) const;
  bool contains(const std::string& bits) const;
  /// offset xor the basis vectors selected by the bits of `coeffs`.
  std::uint64_t element(std::uint64_t coeffs) const;

  /// Uniform distribution over the support; throws SimulationError when
  /// rank exceeds max_rank.
  Distribution to_distribution(int max_rank = 20) const;

 private:
  int width_ = 0;
  std::uint64_t offset_ = 0;
  std::vector<std::uint64_t> basis_;
  std::vector<int> pivots_;
};

/// Applies one Clifford instruction to a tableau, with qubit indices
/// translated through `index`. Throws SimulationError for non-Clifford gates.
void apply_clifford(StabilizerTableau& t, const Instruction& ins, const std::vector<int>& index);

/// Exact output support of a Clifford circuit. Throws SimulationError on a
/// non-Clifford gate or more than 64 classical bits.
AffineSupport stabilizer_support(const Circuit& c);

/// Exact output distribution of a Clifford circuit.
Distribution stabilizer_simulate(const Circuit& c);

/// Exact output distribution by dense state evolution over the active
/// qubits. Throws SimulationError above max_qubits active qubits.
Distribution statevector_simulate(const Circuit& c, int max_qubits = 20);

/// Number of outcomes with probability at least 1e-6.
int count_peaks(const Distribution& dist);

}  // namespace qps
