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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "crfc/adversary/channel.hpp"
#include "crfc/decoders/decoders.hpp"
#include "crfc/experiments/config.hpp"
#include "crfc/experiments/harness.hpp"

namespace crfc::experiments {

// Keys shared by every experiment: trials, seed, threads.
struct RunOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
};

RunOptions run_options(const Config& config);

// Rank of random (k + epsilon) x k matrices.
// Keys: k, epsilon (lists), ensemble = uniform | bernoulli | log, p, log_offset.
ExperimentResult run_rank_experiment(const Config& config);

// LT attacks and payload flips against the resilient code.
// Keys: attack = odd | vanish | flip, k, overhead, packets, symbol_bits,
// rs_c, rs_delta, c, reading, decode; flip also takes the decoder keys.
ExperimentResult run_attack_campaign(const Config& config);

// Keys: decoder = majority | exhaustive | randomized | cross | bp, k, f,
// epsilon, b (lists), m, g, b_param, packets, acceptance, selection,
// knowledge, policy (list), reading, mask, iteration_cap, overhead, rs_c,
// rs_delta.
ExperimentResult run_decoder_benchmark(const Config& config);

// Keys: sources, byzantine (list), k, m, packets, c_assumed, decoder, epsilon.
ExperimentResult run_shared_value_scenario(const Config& config);

// Dispatch on "rank", "attack", "decoder" or "shared-value".
ExperimentResult run_experiment(std::string_view kind, const Config& config);

// String forms used by configs and the CLI.
adversary::VictimPolicy parse_policy(std::string_view name);
adversary::BoundReading parse_reading(std::string_view name);
adversary::FlipMask parse_mask(std::string_view name);
decoders::Acceptance parse_acceptance(std::string_view name);
decoders::Algorithm parse_algorithm(std::string_view name);
// "uniform:offline", "selective:online", ...
void parse_adversary_kind(std::string_view text, adversary::Selection& selection, adversary::Knowledge& knowledge);

}  // namespace crfc::experiments
