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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qps {

enum class Mapper : std::uint8_t { Dense, NoiseAdaptive, Sabre, Trivial };
enum class Router : std::uint8_t { Basic, Stochastic, Sabre, Lookahead };
enum class Scheduler : std::uint8_t { Alap, Asap };

std::string_view mapper_name(Mapper m);
std::string_view router_name(Router r);
std::string_view scheduler_name(Scheduler s);
std::optional<Mapper> mapper_from_name(std::string_view s);
std::optional<Router> router_from_name(std::string_view s);
std::optional<Scheduler> scheduler_from_name(std::string_view s);

/// One option per pipeline stage.
struct PassCombination {
  Mapper mapper = Mapper::Sabre;
  Router router = Router::Sabre;
  Scheduler scheduler = Scheduler::Alap;
  bool trios = false;
  bool dd = false;

  /// "mapper-router-scheduler-trios-dd", e.g. "sabre-sabre-alap-0-0".
  std::string label() const;
  bool operator==(const PassCombination&) const = default;
};

/// Parses the label format produced by PassCombination::label.
std::optional<PassCombination> parse_combination(std::string_view label);

/// Heuristic constants of the SABRE layout and router.
struct SabreConfig {
  int lookahead = 20;
  double lookahead_weight = 0.5;
  double decay = 0.9;
  int stall_limit = 10;
  int layout_iterations = 3;
};

enum class DdSequence : std::uint8_t { XX };

struct PipelineConfig {
  SabreConfig sabre;
  int stochastic_trials = 64;
  DdSequence dd_sequence = DdSequence::XX;
};

PipelineConfig parse_pipeline_config(std::string_view json_text);
std::string pipeline_config_to_json(const PipelineConfig& cfg);

}  // namespace qps
