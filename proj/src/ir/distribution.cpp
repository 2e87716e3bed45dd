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

#include "qps/ir/distribution.hpp"

#include <cmath>

#include "qps/error.hpp"

namespace qps {

std::string format_bits(const std::vector<std::uint8_t>& clbits) {
  std::string s(clbits.size(), '0');
  const std::size_t w = clbits.size();
  for (std::size_t c = 0; c < w; ++c) {
    if (clbits[c]) s[w - 1 - c] = '1';
  }
  return s;
}

std::string format_mask(std::uint64_t mask, int width) {
  std::string s(width, '0');
  for (int c = 0; c < width; ++c) {
    if ((mask >> c) & 1) s[width - 1 - c] = '1';
  }
  return s;
}

std::uint64_t total_shots(const Counts& counts) {
  std::uint64_t n = 0;
  for (const auto& [_, k] : counts) n += k;
  return n;
}

Distribution::Distribution(int width, std::map<std::string, double> probs) : width_(width), probs_(std::move(probs)) {
  double sum = 0.0;
  for (const auto& [bits, p] : probs_) {
    if (static_cast<int>(bits.size()) != width_) throw ValidationError("outcome '" + bits + "' has wrong width");
    if (p < 0.0) throw ValidationError("negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("probabilities sum to " + std::to_string(sum));
}

double Distribution::probability(const std::string& bits) const {
  auto it = probs_.find(bits);
  return it == probs_.end() ? 0.0 : it->second;
}

std::vector<std::string> Distribution::support(double floor) const {
  std::vector<std::string> out;
  for (const auto& [bits, p] : probs_) {
    if (p >= floor) out.push_back(bits);
  }
  return out;
}

double Distribution::max_deviation(const Distribution& other) const {
  double worst = 0.0;
  for (const auto& [bits, p] : probs_) worst = std::max(worst, std::abs(p - other.probability(bits)));
  for (const auto& [bits, p] : other.probs_) worst = std::max(worst, std::abs(p - probability(bits)));
  return worst;
}

Distribution Distribution::from_counts(int width, const Counts& counts) {
  const double n = static_cast<double>(total_shots(counts));
  if (n == 0) throw ValidationError("empty counts");
  std::map<std::string, double> probs;
  for (const auto& [bits, k] : counts) probs[bits] = static_cast<double>(k) / n;
  return Distribution(width, std::move(probs));
}

}  // namespace qps
