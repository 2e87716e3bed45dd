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

#include "qps/emulator/noise.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "../ir/json_rates.hpp"
#include "qps/error.hpp"
#include "qps/util/random.hpp"

namespace qps {

namespace {

void check_unit(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(what + " = " + std::to_string(p) + " is outside [0, 1]");
}

}  // namespace

double NoiseParams::drift_scale(int epoch) const {
  if (drift.empty()) return 1.0;
  const auto i = static_cast<std::size_t>(std::clamp(epoch, 0, static_cast<int>(drift.size()) - 1));
  return drift[i];
}

NoiseParams NoiseParams::from_device(const DeviceModel& d) {
  NoiseParams np;
  np.rates = d.true_rates() ? *d.true_rates() : d.calibration();
  np.depol_1q = d.sq_error();
  return np;
}

NoiseParams NoiseParams::calibration(const DeviceModel& d) {
  NoiseParams np;
  np.rates = d.calibration();
  np.depol_1q = d.sq_error();
  return np;
}

NoiseParams NoiseParams::noiseless(const DeviceModel& d) {
  NoiseParams np;
  for (const Edge& e : d.edges()) np.rates.cx_error[e] = 0.0;
  np.rates.readout_error.assign(d.num_qubits(), 0.0);
  np.idle = false;
  return np;
}

NoiseParams parse_noise_params(std::string_view json_text, const DeviceModel& d) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("noise parameters are not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("noise parameters must be a JSON object");
  NoiseParams np = NoiseParams::from_device(d);
  try {
    if (j.contains("cx_error")) {
      for (const auto& [key, value] : j.at("cx_error").items()) {
        const Edge e = detail::parse_edge_key(key);
        if (!d.coupled(e.first, e.second)) throw ValidationError("cx_error given for uncoupled edge " + key);
        np.rates.cx_error[e] = value.get<double>();
      }
    }
    if (j.contains("readout_error")) {
      auto ro = j.at("readout_error").get<std::vector<double>>();
      if (static_cast<int>(ro.size()) != d.num_qubits()) throw ValidationError("readout_error needs one entry per qubit");
      np.rates.readout_error = std::move(ro);
    }
    if (j.contains("depol_1q")) np.depol_1q = j.at("depol_1q").get<double>();
    if (j.contains("drift")) np.drift = j.at("drift").get<std::vector<double>>();
    if (j.contains("idle")) np.idle = j.at("idle").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("noise parameters: ") + e.what());
  }
  for (const auto& [e, p] : np.rates.cx_error) check_unit(p, "cx_error[" + detail::edge_key_string(e) + "]");
  for (double p : np.rates.readout_error) check_unit(p, "readout_error");
  check_unit(np.depol_1q, "depol_1q");
  for (double s : np.drift) {
    if (!(s >= 0.0)) throw ValidationError("drift multipliers must be nonnegative");
  }
  return np;
}

NoiseParams load_noise_params(const std::string& path, const DeviceModel& d) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open noise file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_noise_params(ss.str(), d);
}

std::string noise_params_to_json(const NoiseParams& np) {
  nlohmann::json j = detail::rates_to_json(np.rates);
  j["depol_1q"] = np.depol_1q;
  j["drift"] = np.drift;
  j["idle"] = np.idle;
  return j.dump(2);
}

NoiseParams make_scenario(const DeviceModel& d, const ScenarioConfig& cfg) {
  NoiseParams np = NoiseParams::calibration(d);
  Rng rng(cfg.seed);
  auto jitter = [&](double p) {
    if (cfg.jitter <= 0) return p;
    return std::min(0.999, p * std::exp(cfg.jitter * (2 * uniform01(rng) - 1)));
  };
  for (const Edge& e : d.edges()) np.rates.cx_error[e] = jitter(d.cx_error(e.first, e.second));
  for (int q = 0; q < d.num_qubits(); ++q) np.rates.readout_error[q] = jitter(d.readout_error(q));
  if (!d.edges().empty()) {
    const Edge best = *std::min_element(d.edges().begin(), d.edges().end(), [&](const Edge& a, const Edge& b) {
      return d.cx_error(a.first, a.second) < d.cx_error(b.first, b.second);
    });
    double& p = np.rates.cx_error[edge_key(best.first, best.second)];
    p = std::min(0.999, p * cfg.poison_factor);
  }
  np.drift = {cfg.drift};
  return np;
}

}  // namespace qps
