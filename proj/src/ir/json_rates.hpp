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

#include <json.hpp>
#include <string>

#include "qps/ir/device.hpp"

namespace qps::detail {

/// "i-j" -> normalized edge. Throws ValidationError on malformed keys.
Edge parse_edge_key(const std::string& key);
std::string edge_key_string(const Edge& e);

/// Reads {cx_error: {"i-j": p}, readout_error: [...]}; absent entries come
/// from `fallback`.
ErrorRates rates_from_json(const nlohmann::json& j, const ErrorRates& fallback, int num_qubits);
nlohmann::json rates_to_json(const ErrorRates& r);

void check_probability(double p, const std::string& what);

}  // namespace qps::detail
