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
#include <string>
#include <string_view>
#include <vector>

#include "qps/ir/device.hpp"

namespace qps {

/// Ground-truth noise driving the emulator. Rates are indexed by physical
/// qubit and device edge.
struct NoiseParams {
  ErrorRates rates;
  /// Depolarizing probability after every physical single-qubit gate.
  double depol_1q = 0.0;
  /// Per-epoch multiplier on gate error rates; epochs past the end reuse the
  /// last entry, an empty schedule means 1.
  std::vector<double> drift;
  /// Pauli-twirled T1/T2 decay during idle windows.
  bool idle = true;

  double drift_scale(int epoch) const;

  /// The device's true-rate overlay when present, its calibration otherwise.
  static NoiseParams from_device(const DeviceModel& d);
  /// Calibration rates only, no drift: what a stale noise model believes.
  static NoiseParams calibration(const DeviceModel& d);
  /// All rates zero and no idle decay.
  static NoiseParams noiseless(const DeviceModel& d);
};

/// JSON keys (all optional): cx_error {"i-j": p}, readout_error [..],
/// depol_1q, drift [..], idle. Missing rates come from NoiseParams::from_device.
/// Throws ValidationError on malformed input or out-of-range values.
NoiseParams parse_noise_params(std::string_view json_text, const DeviceModel& d);
NoiseParams load_noise_params(const std::string& path, const DeviceModel& d);
std::string noise_params_to_json(const NoiseParams& np);

/// Synthetic staleness scenario: true rates are the calibration jittered by
/// a seeded factor exp(U(-jitter, jitter)), then the best-calibrated edge is
/// multiplied by poison_factor; gate errors drift by `drift`.
struct ScenarioConfig {
  double poison_factor = 10.0;
  double drift = 1.5;
  double jitter = 0.0;
  std::uint64_t seed = 0;
};

NoiseParams make_scenario(const DeviceModel& d, const ScenarioConfig& cfg = {});

}  // namespace qps
