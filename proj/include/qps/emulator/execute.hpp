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

#include "qps/emulator/noise.hpp"
#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"
#include "qps/ir/distribution.hpp"

namespace qps {

struct ExecuteOptions {
  /// Distinct noise trajectories for non-Clifford circuits; shots are dealt
  /// round-robin over min(shots, trajectories) of them.
  int trajectories = 1024;
  int max_statevector_qubits = 20;
};

/// Runs a scheduled, device-valid circuit under stochastic Pauli noise:
/// depolarizing errors after gates, composed idle decay in every gap between
/// two operations on a qubit, symmetric readout flips. Clifford circuits are
/// sampled exactly from the stabilizer support with a propagated Pauli frame;
/// others use statevector trajectories. Deterministic in (seed, epoch).
/// Throws ValidationError for invalid or unscheduled circuits and
/// SimulationError when a non-Clifford circuit is too wide.
Counts execute(const Circuit& c, const DeviceModel& d, const NoiseParams& np, std::uint64_t shots, std::uint64_t seed,
               int epoch = 0, const ExecuteOptions& opts = {});

/// Same machinery driven by calibration rates with drift 1.
Counts noise_model_predict(const Circuit& c, const DeviceModel& d, std::uint64_t shots, std::uint64_t seed,
                           const ExecuteOptions& opts = {});

/// Estimated success probability from calibration data: product of CX and
/// readout reliabilities times exp(-sum_q t_q (1/T1 + 1/T2)), with t_q the
/// span from a qubit's first operation to the end of its last.
/// Throws ValidationError for an unscheduled circuit.
double esp_predict(const Circuit& c, const DeviceModel& d);

}  // namespace qps
