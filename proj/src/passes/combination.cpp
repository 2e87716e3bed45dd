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

#include "qps/passes/combination.hpp"

#include <array>
#include <json.hpp>

#include "qps/error.hpp"

namespace qps {

namespace {

constexpr std::array<std::string_view, 4> kMappers{"dense", "noise_adaptive", "sabre", "trivial"};
constexpr std::array<std::string_view, 4> kRouters{"basic", "stochastic", "sabre", "lookahead"};
constexpr std::array<std::string_view, 2> kSchedulers{"alap", "asap"};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::string_view, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<E>(i);
  }
  return std::nullopt;
}

}  // namespace

std::string_view mapper_name(Mapper m) { return kMappers[static_cast<int>(m)]; }
std::string_view router_name(Router r) { return kRouters[static_cast<int>(r)]; }
std::string_view scheduler_name(Scheduler s) { return kSchedulers[static_cast<int>(s)]; }
std::optional<Mapper> mapper_from_name(std::string_view s) { return lookup<Mapper>(kMappers, s); }
std::optional<Router> router_from_name(std::string_view s) { return lookup<Router>(kRouters, s); }
std::optional<Scheduler> scheduler_from_name(std::string_view s) { return lookup<Scheduler>(kSchedulers, s); }

std::string PassCombination::label() const {
  std::string out(mapper_name(mapper));
  out += '-';
  out += router_name(router);
  out += '-';
  out += scheduler_name(scheduler);
  out += trios ? "-1" : "-0";
  out += dd ? "-1" : "-0";
  return out;
}

std::optional<PassCombination> parse_combination(std::string_view label) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t dash = label.find('-', pos);
    parts.push_back(label.substr(pos, dash == std::string_view::npos ? std::string_view::npos : dash - pos));
    if (dash == std::string_view::npos) break;
    pos = dash + 1;
  }
  if (parts.size() != 5) return std::nullopt;
  auto flag = [](std::string_view s) -> std::optional<bool> {
    if (s == "0") return false;
    if (s == "1") return true;
    return std::nullopt;
  };
  const auto m = mapper_from_name(parts[0]);
  const auto r = router_from_name(parts[1]);
  const auto sc = scheduler_from_name(parts[2]);
  const auto t = flag(parts[3]);
  const auto d = flag(parts[4]);
  if (!m || !r || !sc || !t || !d) return std::nullopt;
  return PassCombination{*m, *r, *sc, *t, *d};
}

PipelineConfig parse_pipeline_config(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("pipeline config: ") + e.what());
  }
  PipelineConfig cfg;
  try {
    if (j.contains("sabre")) {
      const auto& s = j.at("sabre");
      cfg.sabre.lookahead = s.value("lookahead", cfg.sabre.lookahead);
      cfg.sabre.lookahead_weight = s.value("lookahead_weight", cfg.sabre.lookahead_weight);
      cfg.sabre.decay = s.value("decay", cfg.sabre.decay);
      cfg.sabre.stall_limit = s.value("stall_limit", cfg.sabre.stall_limit);
      cfg.sabre.layout_iterations = s.value("layout_iterations", cfg.sabre.layout_iterations);
    }
    cfg.stochastic_trials = j.value("stochastic_trials", cfg.stochastic_trials);
    if (j.contains("dd_sequence") && j.at("dd_sequence").get<std::string>() != "XX") {
      throw ValidationError("pipeline config: unsupported dd_sequence");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("pipeline config: ") + e.what());
  }
  if (cfg.sabre.lookahead < 0 || cfg.sabre.lookahead_weight < 0 || cfg.sabre.decay <= 0 || cfg.sabre.decay > 1 ||
      cfg.sabre.stall_limit < 1 || cfg.sabre.layout_iterations < 1 || cfg.stochastic_trials < 1) {
    throw ValidationError("pipeline config: constant out of range");
  }
  return cfg;
}

std::string pipeline_config_to_json(const PipelineConfig& cfg) {
  nlohmann::ordered_json j;
  j["sabre"] = {{"lookahead", cfg.sabre.lookahead},
                {"lookahead_weight", cfg.sabre.lookahead_weight},
                {"decay", cfg.sabre.decay},
                {"stall_limit", cfg.sabre.stall_limit},
                {"layout_iterations", cfg.sabre.layout_iterations}};
  j["stochastic_trials"] = cfg.stochastic_trials;
  j["dd_sequence"] = "XX";
  return j.dump(2) + "\n";
}

}  // namespace qps
