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

#include "qps/ir/circuit.hpp"
#include "qps/ir/device.hpp"
#include "qps/passes/combination.hpp"

namespace qps {

/// Fills start and duration of every instruction. ASAP starts each operation
/// as soon as its qubits are free; ALAP pushes each as late as the ASAP
/// makespan allows. Barriers synchronize their qubits and take no time.
/// Throws PassError for a gate kind without a device duration.
Circuit schedule(const Circuit& c, const DeviceModel& d, Scheduler policy);

/// End time of the last operation of a scheduled circuit.
Time makespan(const Circuit& c);

/// Pads each idle window of an active qubit (between its first and last
/// operation) that is at least 2 * duration(1q) + 2 long with
/// delay, X, delay, X, delay, the pulses centred in the window.
Circuit apply_dd(const Circuit& c, const DeviceModel& d);

}  // namespace qps
