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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "crfc/adversary/channel.hpp"
#include "crfc/decoders/plan.hpp"
#include "crfc/experiments/config.hpp"
#include "crfc/experiments/harness.hpp"

namespace crfc::experiments::detail {

struct DecoderCell {
  std::string decoder;
  std::size_t k = 0;
  std::size_t m = 1;
  std::size_t f = 0;
  std::size_t epsilon = 0;
  std::optional<double> selective_b;
  std::size_t g = 0;
  double b_param = 2.0;
  std::size_t packets = 0;
  decoders::Acceptance acceptance = decoders::Acceptance::kAllButF;
  adversary::Selection selection = adversary::Selection::kUniform;
  adversary::Knowledge knowledge = adversary::Knowledge::kOffline;
  adversary::VictimPolicy policy = adversary::VictimPolicy::kArrival;
  adversary::BoundReading reading = adversary::BoundReading::kFinalSet;
  adversary::FlipMask mask = adversary::FlipMask::kComplement;
  std::size_t iteration_cap = 0;
  double overhead = 2.0;
  double rs_c = 0.1;
  double rs_delta = 0.05;
  double step = 0.5;
};

struct PreparedCell {
  DecoderCell cell;
  decoders::DecodePlan plan;
  std::size_t packets = 0;
  std::size_t g = 0;
  double predicted_iterations = 0;
};

const std::set<std::string>& decoder_keys();
std::vector<DecoderCell> decoder_cells(const Config& config);
std::string cell_name(const DecoderCell& cell);
PreparedCell prepare(const DecoderCell& cell);
// One trial: encode, corrupt per the cell's adversary, decode, score
// against the true blocks. metric = rank of the uncorrupted packets.
TrialRecord decoder_trial(const PreparedCell& cell, std::uint64_t seed);
nlohmann::json plan_summary(const PreparedCell& cell);

}  // namespace crfc::experiments::detail
