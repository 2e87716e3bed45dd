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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qps/linalg/gates.hpp"

namespace qps {

/// Dense n-qubit pure state. Basis index bit q holds qubit q.
template <typename Scalar = double>
class StateVector {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  explicit StateVector(int num_qubits) : n_(num_qubits), amp_(Vector::Zero(Eigen::Index(1) << num_qubits)) {
    amp_(0) = Complex(1);
  }

  int num_qubits() const { return n_; }
  const Vector& amplitudes() const { return amp_; }
  Vector& amplitudes() { return amp_; }

  void apply(const Mat2<Scalar>& m, int q) {
    const std::int64_t bit = std::int64_t(1) << q;
    const std::int64_t dim = amp_.size();
    Complex* a = amp_.data();
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (std::int64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const Complex a0 = a[i];
      const Complex a1 = a[i | bit];
      a[i] = m00 * a0 + m01 * a1;
      a[i | bit] = m10 * a0 + m11 * a1;
    }
  }

  /// diag(1, e^{i theta}) on q; RZ up to global phase.
  void apply_phase(double theta, int q) {
    const std::int64_t bit = std::int64_t(1) << q;
    const Complex ph = std::polar(Scalar(1), static_cast<Scalar>(theta));
    Complex* a = amp_.data();
    for (std::int64_t i = 0; i < amp_.size(); ++i) {
      if (i & bit) a[i] *= ph;
    }
  }

  void apply_x(int q) {
    const std::int64_t bit = std::int64_t(1) << q;
    Complex* a = amp_.data();
    for (std::int64_t i = 0; i < amp_.size(); ++i) {
      if (!(i & bit)) std::swap(a[i], a[i | bit]);
    }
  }

  void apply_z(int q) { apply_phase(std::numbers::pi, q); }

  /// Y up to global phase (i X Z).
  void apply_y(int q) {
    apply_z(q);
    apply_x(q);
  }

  void apply_cx(int c, int t) {
    const std::int64_t cb = std::int64_t(1) << c;
    const std::int64_t tb = std::int64_t(1) << t;
    Complex* a = amp_.data();
    for (std::int64_t i = 0; i < amp_.size(); ++i) {
      if ((i & cb) && !(i & tb)) std::swap(a[i], a[i | tb]);
    }
  }

  void apply_ccx(int c0, int c1, int t) {
    const std::int64_t m = (std::int64_t(1) << c0) | (std::int64_t(1) << c1);
    const std::int64_t tb = std::int64_t(1) << t;
    Complex* a = amp_.data();
    for (std::int64_t i = 0; i < amp_.size(); ++i) {
      if ((i & m) == m && !(i & tb)) std::swap(a[i], a[i | tb]);
    }
  }

  void apply_swap(int p, int q) {
    const std::int64_t pb = std::int64_t(1) << p;
    const std::int64_t qb = std::int64_t(1) << q;
    Complex* a = amp_.data();
    for (std::int64_t i = 0; i < amp_.size(); ++i) {
      if ((i & pb) && !(i & qb)) std::swap(a[i], a[(i ^ pb) | qb]);
    }
  }

  /// Applies a unitary instruction whose operands are already state indices.
  void apply(const Instruction& ins, const std::vector<int>& qs) {
    switch (ins.gate) {
      case Gate::I: return;
      case Gate::X: return apply_x(qs[0]);
      case Gate::Z: return apply_z(qs[0]);
      case Gate::S: return apply_phase(std::numbers::pi / 2, qs[0]);
      case Gate::RZ: return apply_phase(ins.angle, qs[0]);
      case Gate::H:
      case Gate::SX: return apply(single_qubit_matrix<Scalar>(ins.gate), qs[0]);
      case Gate::CX: return apply_cx(qs[0], qs[1]);
      case Gate::CCX: return apply_ccx(qs[0], qs[1], qs[2]);
      case Gate::SWAP: return apply_swap(qs[0], qs[1]);
      default: return;
    }
  }

  /// |amplitude|^2 per basis index.
  std::vector<Scalar> probabilities() const {
    std::vector<Scalar> p(amp_.size());
    for (Eigen::Index i = 0; i < amp_.size(); ++i) p[i] = std::norm(amp_(i));
    return p;
  }

 private:
  int n_;
  Vector amp_;
};

/// Full 2^n x 2^n unitary of a gate list by Kronecker products (test oracle;
/// directives are skipped). Qubit q is bit q of the basis index.
template <typename Scalar = double>
MatX<Scalar> circuit_unitary(const Circuit& c) {
  using C = std::complex<Scalar>;
  const int n = c.num_qubits();
  const Eigen::Index dim = Eigen::Index(1) << n;
  MatX<Scalar> u = MatX<Scalar>::Identity(dim, dim);
  for (const Instruction& ins : c.instructions()) {
    MatX<Scalar> g = MatX<Scalar>::Zero(dim, dim);
    if (is_single_qubit_unitary(ins.gate)) {
      const Mat2<Scalar> m = single_qubit_matrix<Scalar>(ins.gate, ins.angle);
      // Build kron(I, ..., m, ..., I) with qubit 0 as the least significant factor.
      MatX<Scalar> acc = MatX<Scalar>::Identity(1, 1);
      for (int q = n - 1; q >= 0; --q) {
        MatX<Scalar> f = q == ins.qubits[0] ? MatX<Scalar>(m) : MatX<Scalar>::Identity(2, 2);
        MatX<Scalar> next(acc.rows() * 2, acc.cols() * 2);
        for (Eigen::Index i = 0; i < acc.rows(); ++i)
          for (Eigen::Index j = 0; j < acc.cols(); ++j) next.block(i * 2, j * 2, 2, 2) = acc(i, j) * f;
        acc = next;
      }
      g = acc;
    } else if (ins.gate == Gate::CX || ins.gate == Gate::CCX || ins.gate == Gate::SWAP) {
      for (Eigen::Index col = 0; col < dim; ++col) {
        Eigen::Index row = col;
        auto bit = [&](int q) { return (col >> q) & 1; };
        if (ins.gate == Gate::CX && bit(ins.qubits[0])) row ^= Eigen::Index(1) << ins.qubits[1];
        if (ins.gate == Gate::CCX && bit(ins.qubits[0]) && bit(ins.qubits[1])) row ^= Eigen::Index(1) << ins.qubits[2];
        if (ins.gate == Gate::SWAP && bit(ins.qubits[0]) != bit(ins.qubits[1])) {
          row ^= (Eigen::Index(1) << ins.qubits[0]) | (Eigen::Index(1) << ins.qubits[1]);
        }
        g(row, col) = C(1);
      }
    } else {
      continue;
    }
    u = g * u;
  }
  return u;
}

}  // namespace qps
