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
#include <vector>

namespace qps {

/// Stabilizer state on n qubits in destabilizer/stabilizer form: rows 0..n-1
/// are destabilizers, rows n..2n-1 stabilizers, each a bit-packed Pauli with
/// a sign bit. Starts in |0...0>.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(int num_qubits);

  int num_qubits() const { return n_; }

  void h(int q);
  void s(int q);
  void sdg(int q);
  void x(int q);
  void y(int q);
  void z(int q);
  /// sqrt(X) up to global phase, as S^dag H S^dag.
  void sx(int q);
  void cx(int c, int t);
  void swap(int a, int b);

  /// Z-basis measurement. A random outcome takes `forced` when given,
  /// otherwise 0. `was_random` reports which case occurred.
  int measure(int q, std::optional<int> forced = std::nullopt, bool* was_random = nullptr);

  /// True when measuring q now would give a random outcome.
  bool is_random(int q) const;

  /// Stabilizer generators commute pairwise and each destabilizer
  /// anticommutes only with its partner.
  bool is_consistent() const;

 private:
  bool xbit(int row, int q) const { return (x_[row * words_ + q / 64] >> (q % 64)) & 1; }
  bool zbit(int row, int q) const { return (z_[row * words_ + q / 64] >> (q % 64)) & 1; }
  void rowsum(int h, int i);
  void clear_row(int row);
  void copy_row(int dst, int src);
  bool anticommute(int a, int b) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint8_t> r_;
};

}  // namespace qps
