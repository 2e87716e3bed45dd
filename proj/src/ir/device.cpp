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

#include "qps/ir/device.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "json_rates.hpp"
#include "qps/error.hpp"

namespace qps {

namespace detail {

Edge parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos) throw ValidationError("edge key '" + key + "' is not of the form i-j");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(key.substr(0, dash), &used_a);
    const int b = std::stoi(key.substr(dash + 1), &used_b);
    if (used_a != dash || used_b != key.size() - dash - 1) throw std::invalid_argument(key);
    return edge_key(a, b);
  } catch (const std::logic_error&) {
    throw ValidationError("edge key '" + key + "' is not of the form i-j");
  }
}

std::string edge_key_string(const Edge& e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

void check_probability(double p, const std::string& what) {
  if (!(p >= 0.0 && p < 1.0)) throw ValidationError(what + " = " + std::to_string(p) + " is outside [0, 1)");
}

ErrorRates rates_from_json(const nlohmann::json& j, const ErrorRates& fallback, int num_qubits) {
  ErrorRates r = fallback;
  if (j.contains("cx_error")) {
    for (const auto& [key, value] : j.at("cx_error").items()) {
      const Edge e = parse_edge_key(key);
      if (!fallback.cx_error.empty() && !fallback.cx_error.count(e)) {
        throw ValidationError("cx_error given for uncoupled edge " + key);
      }
      r.cx_error[e] = value.get<double>();
    }
  }
  if (j.contains("readout_error")) {
    auto ro = j.at("readout_error").get<std::vector<double>>();
    if (static_cast<int>(ro.size()) != num_qubits) throw ValidationError("readout_error needs one entry per qubit");
    r.readout_error = std::move(ro);
  }
  for (const auto& [e, p] : r.cx_error) check_probability(p, "cx_error[" + edge_key_string(e) + "]");
  for (double p : r.readout_error) check_probability(p, "readout_error");
  return r;
}

nlohmann::json rates_to_json(const ErrorRates& r) {
  nlohmann::json cx = nlohmann::json::object();
  for (const auto& [e, p] : r.cx_error) cx[edge_key_string(e)] = p;
  return {{"cx_error", cx}, {"readout_error", r.readout_error}};
}

}  // namespace detail

std::optional<Time> Durations::of(const Instruction& ins) const {
  if (ins.gate == Gate::Delay) return ins.duration;
  if (ins.gate == Gate::Barrier) return 0;
  if (auto it = overrides.find(ins.gate); it != overrides.end()) return it->second;
  if (is_single_qubit_unitary(ins.gate)) return single_qubit;
  if (ins.gate == Gate::CX) return cx;
  if (ins.gate == Gate::Measure) return measure;
  return std::nullopt;
}

DeviceModel::DeviceModel(Spec spec) : spec_(std::move(spec)) {
  const int n = spec_.num_qubits;
  if (n <= 0) throw ValidationError("device needs at least one qubit");
  if (spec_.coupling.empty() && n > 1) throw ValidationError("empty coupling graph");
  adjacency_.assign(n, {});
  std::set<Edge> seen;
  for (auto& e : spec_.coupling) {
    e = edge_key(e.first, e.second);
    if (e.first < 0 || e.second >= n || e.first == e.second) {
      throw ValidationError("coupling edge " + detail::edge_key_string(e) + " is invalid");
    }
    if (!seen.insert(e).second) continue;
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  spec_.coupling.assign(seen.begin(), seen.end());
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  for (const Edge& e : spec_.coupling) {
    auto it = spec_.calibration.cx_error.find(e);
    if (it == spec_.calibration.cx_error.end()) {
      throw ValidationError("missing cx_error for edge " + detail::edge_key_string(e));
    }
  }
  for (const auto& [e, p] : spec_.calibration.cx_error) {
    if (!seen.count(e)) throw ValidationError("cx_error given for uncoupled edge " + detail::edge_key_string(e));
    detail::check_probability(p, "cx_error[" + detail::edge_key_string(e) + "]");
  }
  auto per_qubit = [n](const std::vector<double>& v, const char* name) {
    if (static_cast<int>(v.size()) != n) throw ValidationError(std::string(name) + " needs one entry per qubit");
  };
  per_qubit(spec_.calibration.readout_error, "readout_error");
  per_qubit(spec_.t1, "t1");
  per_qubit(spec_.t2, "t2");
  for (double p : spec_.calibration.readout_error) detail::check_probability(p, "readout_error");
  detail::check_probability(spec_.sq_error, "sq_error");
  for (int q = 0; q < n; ++q) {
    if (!(spec_.t1[q] > 0) || !(spec_.t2[q] > 0)) throw ValidationError("t1 and t2 must be positive");
    if (spec_.t2[q] > 2.0 * spec_.t1[q]) {
      throw ValidationError("t2 > 2*t1 on qubit " + std::to_string(q));
    }
  }
  if (spec_.true_rates) {
    for (const auto& [e, p] : spec_.true_rates->cx_error) {
      if (!seen.count(e)) throw ValidationError("true cx_error for uncoupled edge " + detail::edge_key_string(e));
      detail::check_probability(p, "true cx_error");
    }
    for (const Edge& e : spec_.coupling) {
      if (!spec_.true_rates->cx_error.count(e)) spec_.true_rates->cx_error[e] = spec_.calibration.cx_error[e];
    }
    if (spec_.true_rates->readout_error.empty()) spec_.true_rates->readout_error = spec_.calibration.readout_error;
    per_qubit(spec_.true_rates->readout_error, "true readout_error");
    for (double p : spec_.true_rates->readout_error) detail::check_probability(p, "true readout_error");
  }

  dist_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    dist_[s * n + s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency_[u]) {
        if (dist_[s * n + v] < 0) {
          dist_[s * n + v] = dist_[s * n + u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (dist_[v] < 0) throw ValidationError("coupling graph is disconnected");
  }
}

DeviceModel DeviceModel::line(int n, double cx_error, double readout_error) {
  Spec s;
  s.num_qubits = n;
  for (int q = 0; q + 1 < n; ++q) {
    s.coupling.emplace_back(q, q + 1);
    s.calibration.cx_error[{q, q + 1}] = cx_error;
  }
  s.calibration.readout_error.assign(n, readout_error);
  s.t1.assign(n, 1e9);
  s.t2.assign(n, 1e9);
  return DeviceModel(std::move(s));
}

bool DeviceModel::coupled(int a, int b) const {
  if (a < 0 || b < 0 || a >= num_qubits() || b >= num_qubits()) return false;
  return distance(a, b) == 1;
}

double DeviceModel::cx_error(int a, int b) const {
  auto it = spec_.calibration.cx_error.find(edge_key(a, b));
  if (it == spec_.calibration.cx_error.end()) throw ValidationError("qubits are not coupled");
  return it->second;
}

DeviceModel parse_device_model(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("device model is not valid JSON: ") + e.what());
  }
  auto require = [&j](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw ValidationError(std::string("device model is missing field '") + key + "'");
    return j.at(key);
  };
  try {
    DeviceModel::Spec s;
    s.num_qubits = require("num_qubits").get<int>();
    for (const auto& e : require("coupling")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("coupling entries must be [i, j] pairs");
      s.coupling.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    require("cx_error");
    require("readout_error");
    s.calibration = detail::rates_from_json(j, {}, s.num_qubits);
    s.t1 = require("t1").get<std::vector<double>>();
    s.t2 = require("t2").get<std::vector<double>>();
    if (j.contains("sq_error")) s.sq_error = j.at("sq_error").get<double>();
    if (j.contains("durations")) {
      for (const auto& [key, value] : j.at("durations").items()) {
        const Time t = value.get<Time>();
        if (t < 0) throw ValidationError("negative duration for '" + key + "'");
        if (key == "1q") {
          s.durations.single_qubit = t;
        } else if (key == "cx") {
          s.durations.cx = t;
        } else if (key == "measure") {
          s.durations.measure = t;
        } else if (auto g = gate_from_name(key)) {
          s.durations.overrides[*g] = t;
        } else {
          throw ValidationError("unknown duration key '" + key + "'");
        }
      }
    }
    if (j.contains("basis")) {
      s.basis.clear();
      for (const auto& tag : j.at("basis")) {
        auto g = gate_from_name(tag.get<std::string>());
        if (!g) throw ValidationError("unknown basis gate '" + tag.get<std::string>() + "'");
        s.basis.insert(*g);
      }
    }
    if (j.contains("true_rates")) s.true_rates = detail::rates_from_json(j.at("true_rates"), {}, s.num_qubits);
    return DeviceModel(std::move(s));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("device model: ") + e.what());
  }
}

DeviceModel load_device_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open device file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_device_model(ss.str());
}

std::string device_model_to_json(const DeviceModel& d) {
  nlohmann::json j = detail::rates_to_json(d.calibration());
  j["num_qubits"] = d.num_qubits();
  nlohmann::json coupling = nlohmann::json::array();
  for (const Edge& e : d.edges()) coupling.push_back({e.first, e.second});
  j["coupling"] = coupling;
  j["t1"] = d.spec().t1;
  j["t2"] = d.spec().t2;
  j["sq_error"] = d.sq_error();
  nlohmann::json dur = {{"1q", d.durations().single_qubit},
                        {"cx", d.durations().cx},
                        {"measure", d.durations().measure}};
  for (const auto& [g, t] : d.durations().overrides) dur[std::string(gate_name(g))] = t;
  j["durations"] = dur;
  nlohmann::json basis = nlohmann::json::array();
  for (Gate g : d.basis()) basis.push_back(std::string(gate_name(g)));
  j["basis"] = basis;
  if (d.true_rates()) j["true_rates"] = detail::rates_to_json(*d.true_rates());
  return j.dump(2);
}

}  // namespace qps
