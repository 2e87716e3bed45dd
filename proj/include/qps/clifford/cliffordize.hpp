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
#include <numbers>

#include "qps/ir/circuit.hpp"

namespace qps {

struct CliffordizeConfig {
  /// Half-width of the band around odd multiples of pi/4 where rounding is random.
  double delta = std::numbers::pi / 100;
  int max_attempts = 100;
  std::uint64_t seed = 0;
};

struct CliffordizeResult {
  Circuit circuit;
  /// Size of the dummy's exact output support.
  std::uint64_t peaks = 0;
  int attempts = 0;
};

/// Replaces every RZ angle by a multiple of pi/2: the nearest one, or a random
/// neighbour when the angle lies strictly within delta of an odd multiple of
/// pi/4. Retries the random choices until the dummy's peak count equals
/// target_peaks, keeping the closest attempt (earliest on ties) otherwise.
/// Accepts only I, X, SX, RZ, CX, measure, delay and barrier.
CliffordizeResult cliffordize(const Circuit& c, std::uint64_t target_peaks, const CliffordizeConfig& cfg = {});

}  // namespace qps
