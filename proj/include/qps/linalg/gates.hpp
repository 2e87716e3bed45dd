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
#include <cmath>
#include <complex>
#include <numbers>

#include "qps/error.hpp"
#include "qps/ir/circuit.hpp"

namespace qps {

template <typename Scalar>
using Mat2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
using MatX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// 2x2 matrix of a one-qubit unitary gate in the computational basis.
/// RZ(t) = diag(e^{-it/2}, e^{it/2}).
template <typename Scalar = double>
Mat2<Scalar> single_qubit_matrix(Gate g, double angle = 0.0) {
  using C = std::complex<Scalar>;
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  Mat2<Scalar> m;
  switch (g) {
    case Gate::I: m << C(1), C(0), C(0), C(1); break;
    case Gate::X: m << C(0), C(1), C(1), C(0); break;
    case Gate::Z: m << C(1), C(0), C(0), C(-1); break;
    case Gate::S: m << C(1), C(0), C(0), C(0, 1); break;
    case Gate::H: m << C(r), C(r), C(r), C(-r); break;
    case Gate::SX:
      m << C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5);
      break;
    case Gate::RZ: {
      const Scalar h = static_cast<Scalar>(angle) / 2;
      m << std::polar(Scalar(1), -h), C(0), C(0), std::polar(Scalar(1), h);
      break;
    }
    default:
      throw SimulationError("not a single-qubit unitary");
  }
  return m;
}

/// Distance between unitaries modulo global phase: min over phi of
/// max-entry |a - e^{i phi} b|, with phi fixed by the largest entry of b.
template <typename Derived1, typename Derived2>
double phase_insensitive_distance(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  using C = typename Derived1::Scalar;
  Eigen::Index bi = 0;
  Eigen::Index bj = 0;
  b.cwiseAbs().maxCoeff(&bi, &bj);
  if (std::abs(b(bi, bj)) == 0) return a.cwiseAbs().maxCoeff();
  const C phase = a(bi, bj) / b(bi, bj);
  const C unit = phase / std::abs(phase);
  return static_cast<double>((a - unit * b).cwiseAbs().maxCoeff());
}

}  // namespace qps
