// Copyright 2026 The crfc Authors.
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

#include <algorithm>
#include <cstdio>
#include <map>

#include "crfc/experiments/experiments.hpp"
#include "crfc/experiments/stats.hpp"
#include "internal.hpp"

namespace crfc::experiments {

namespace detail {

nlohmann::json config_echo(const Config& config) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, items] : config.entries()) {
    out[key] = items.size() == 1 ? nlohmann::json(items.front()) : nlohmann::json(items);
  }
  return out;
}

nlohmann::json summarize_cell(std::span<const TrialRecord> records) {
  std::size_t successes = 0;
  double metric = 0;
  double corrupted = 0;
  std::map<std::string, std::size_t> outcomes;
  std::vector<std::size_t> iterations;
  for (const auto& r : records) {
    successes += r.success ? 1 : 0;
    metric += r.metric;
    corrupted += static_cast<double>(r.corrupted);
    ++outcomes[r.outcome];
    iterations.push_back(r.iterations);
  }
  std::sort(iterations.begin(), iterations.end());
  const auto n = records.size();
  const auto ci = wilson(successes, n);
  auto pct = [&](double q) {
    if (iterations.empty()) return std::size_t{0};
    return iterations[static_cast<std::size_t>(q * static_cast<double>(iterations.size() - 1))];
  };
  double mean_iter = 0;
  for (const auto i : iterations) mean_iter += static_cast<double>(i);

  nlohmann::json out;
  out["trials"] = n;
  out["successes"] = successes;
  out["success_rate"] = n ? static_cast<double>(successes) / static_cast<double>(n) : 0.0;
  out["success_wilson95"] = {ci.lo, ci.hi};
  out["outcomes"] = outcomes;
  out["mean_iterations"] = n ? mean_iter / static_cast<double>(n) : 0.0;
  out["p50_iterations"] = pct(0.5);
  out["p90_iterations"] = pct(0.9);
  out["mean_metric"] = n ? metric / static_cast<double>(n) : 0.0;
  out["mean_corrupted"] = n ? corrupted / static_cast<double>(n) : 0.0;
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

RunOptions run_options(const Config& config) {
  RunOptions o;
  o.trials = config.get_uint("trials", o.trials);
  o.seed = config.get_uint("seed", o.seed);
  o.threads = config.get_uint("threads", o.threads);
  if (o.trials == 0) throw ConfigError("trials must be positive");
  return o;
}

ExperimentResult run_experiment(std::string_view kind, const Config& config) {
  if (config.has("experiment") && config.get_string("experiment", "") != kind) {
    throw ConfigError("config is for experiment '" + config.get_string("experiment", "") + "', not '" +
                      std::string(kind) + "'");
  }
  if (kind == "rank") return run_rank_experiment(config);
  if (kind == "attack") return run_attack_campaign(config);
  if (kind == "decoder") return run_decoder_benchmark(config);
  if (kind == "shared-value") return run_shared_value_scenario(config);
  throw ConfigError("unknown experiment '" + std::string(kind) + "'");
}

adversary::VictimPolicy parse_policy(std::string_view name) {
  for (const auto p : adversary::kAllVictimPolicies) {
    if (adversary::policy_name(p) == name) return p;
  }
  throw ConfigError("unknown victim policy '" + std::string(name) + "'");
}

adversary::BoundReading parse_reading(std::string_view name) {
  if (name == "prefix") return adversary::BoundReading::kPrefix;
  if (name == "final-set") return adversary::BoundReading::kFinalSet;
  throw ConfigError("reading must be prefix or final-set, got '" + std::string(name) + "'");
}

adversary::FlipMask parse_mask(std::string_view name) {
  if (name == "complement") return adversary::FlipMask::kComplement;
  if (name == "random") return adversary::FlipMask::kRandomSubset;
  throw ConfigError("mask must be complement or random, got '" + std::string(name) + "'");
}

decoders::Acceptance parse_acceptance(std::string_view name) {
  if (name == "all-but-f") return decoders::Acceptance::kAllButF;
  if (name == "fixed") return decoders::Acceptance::kFixedThreshold;
  throw ConfigError("acceptance must be all-but-f or fixed, got '" + std::string(name) + "'");
}

decoders::Algorithm parse_algorithm(std::string_view name) {
  for (const auto a : {decoders::Algorithm::kMajority, decoders::Algorithm::kExhaustive,
                       decoders::Algorithm::kRandomized}) {
    if (decoders::algorithm_name(a) == name) return a;
  }
  throw ConfigError("unknown decoder '" + std::string(name) + "'");
}

void parse_adversary_kind(std::string_view text, adversary::Selection& selection, adversary::Knowledge& knowledge) {
  const auto colon = text.find(':');
  const auto sel = text.substr(0, colon);
  const auto know = colon == std::string_view::npos ? std::string_view("offline") : text.substr(colon + 1);
  if (sel == "uniform") {
    selection = adversary::Selection::kUniform;
  } else if (sel == "selective") {
    selection = adversary::Selection::kSelective;
  } else {
    throw ConfigError("adversary selection must be uniform or selective, got '" + std::string(sel) + "'");
  }
  if (know == "offline") {
    knowledge = adversary::Knowledge::kOffline;
  } else if (know == "online") {
    knowledge = adversary::Knowledge::kOnline;
  } else {
    throw ConfigError("adversary knowledge must be online or offline, got '" + std::string(know) + "'");
  }
}

}  // namespace crfc::experiments
