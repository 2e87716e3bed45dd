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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qps/ir/circuit.hpp"

namespace qps {

using Edge = std::pair<int, int>;

/// Normalizes an undirected edge so that first < second.
inline Edge edge_key(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Gate durations in dt. Unlisted multi-qubit kinds (ccx, swap) have no
/// duration unless given explicitly, so scheduling them is an error.
struct Durations {
  Time single_qubit = 1;
  Time cx = 5;
  Time measure = 20;
  std::map<Gate, Time> overrides;

  std::optional<Time> of(const Instruction& ins) const;
};

/// Per-edge and per-qubit error rates. Used both for calibration data and for
/// the optional "true rates" overlay read by the emulator.
struct ErrorRates {
  std::map<Edge, double> cx_error;
  std::vector<double> readout_error;
};

class DeviceModel {
 public:
  struct Spec {
    int num_qubits = 0;
    std::vector<Edge> coupling;
    ErrorRates calibration;
    std::vector<double> t1;
    std::vector<double> t2;
    /// Calibrated single-qubit gate error; not part of ESP.
    double sq_error = 0.0;
    Durations durations;
    std::set<Gate> basis{Gate::I, Gate::X, Gate::SX, Gate::RZ, Gate::CX};
    std::optional<ErrorRates> true_rates;
  };

  DeviceModel() = default;
  /// Throws ValidationError on out-of-range probabilities, t2 > 2*t1,
  /// missing per-edge rates or a disconnected coupling graph.
  explicit DeviceModel(Spec spec);

  /// Line 0-1-...-(n-1) with uniform rates; t1 = t2 = 1e9.
  static DeviceModel line(int n, double cx_error = 0.0, double readout_error = 0.0);

  int num_qubits() const { return spec_.num_qubits; }
  const std::vector<Edge>& edges() const { return spec_.coupling; }
  bool coupled(int a, int b) const;
  const std::vector<int>& neighbors(int q) const { return adjacency_[q]; }
  /// Hop distance in the coupling graph.
  int distance(int a, int b) const { return dist_[a * spec_.num_qubits + b]; }

  double cx_error(int a, int b) const;
  double readout_error(int q) const { return spec_.calibration.readout_error[q]; }
  double t1(int q) const { return spec_.t1[q]; }
  double t2(int q) const { return spec_.t2[q]; }
  double sq_error() const { return spec_.sq_error; }
  const ErrorRates& calibration() const { return spec_.calibration; }
  const std::optional<ErrorRates>& true_rates() const { return spec_.true_rates; }
  const Durations& durations() const { return spec_.durations; }
  const std::set<Gate>& basis() const { return spec_.basis; }
  bool in_basis(Gate g) const { return is_directive(g) || spec_.basis.count(g) > 0; }
  const Spec& spec() const { return spec_; }

 private:
  Spec spec_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> dist_;
};

/// Parses the JSON device description (keys num_qubits, coupling, cx_error,
/// readout_error, t1, t2, durations, basis, optional sq_error, true_rates).
DeviceModel parse_device_model(std::string_view json_text);
DeviceModel load_device_model(const std::string& path);
std::string device_model_to_json(const DeviceModel& d);

}  // namespace qps
