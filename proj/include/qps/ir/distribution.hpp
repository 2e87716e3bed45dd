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
#include <map>
#include <string>
#include <vector>

namespace qps {

/// Classical-register outcome as a string, most significant bit first:
/// character k holds clbit (width - 1 - k).
std::string format_bits(const std::vector<std::uint8_t>& clbits);

/// Same convention for a register of at most 64 bits packed as bit c = clbit c.
std::string format_mask(std::uint64_t mask, int width);

/// Shot histogram keyed by bitstring.
using Counts = std::map<std::string, std::uint64_t>;

std::uint64_t total_shots(const Counts& counts);

/// Outcome probabilities over a classical register of fixed width.
class Distribution {
 public:
  Distribution() = default;
  /// Throws ValidationError when a key has the wrong width or the
  /// probabilities do not sum to 1 within 1e-9.
  Distribution(int width, std::map<std::string, double> probs);

  int width() const { return width_; }
  const std::map<std::string, double>& probabilities() const { return probs_; }
  double probability(const std::string& bits) const;
  /// Outcomes with probability >= floor.
  std::vector<std::string> support(double floor = 1e-6) const;

  /// Largest absolute probability difference over the union of keys.
  double max_deviation(const Distribution& other) const;

  static Distribution from_counts(int width, const Counts& counts);

 private:
  int width_ = 0;
  std::map<std::string, double> probs_;
};

}  // namespace qps
