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
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "crfc/random.hpp"

namespace crfc::experiments {

struct TrialRecord {
  std::string experiment;
  std::string cell;
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t epsilon = 0;
  std::size_t f = 0;
  std::string param;
  std::string outcome;
  std::size_t corrupted = 0;
  std::size_t satisfied = 0;
  std::size_t iterations = 0;
  double metric = 0;
  std::int64_t elapsed_us = 0;  // wall time; the only nondeterministic column
  bool success = false;         // not written; used for aggregation
};

inline constexpr const char* kCsvHeader =
    "experiment,cell,trial,trial_seed,k,m,epsilon,f,param,outcome,corrupted,satisfied,iterations,metric,elapsed_us";

std::string csv_row(const TrialRecord& r);
std::string to_csv(std::span<const TrialRecord> records);

// Seed of trial `trial` in cell `cell`: derive_seed(derive_seed(master, cell), trial).
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t trial) noexcept {
  return derive_seed(derive_seed(master, cell), trial);
}

using TrialFn = std::function<TrialRecord(std::size_t trial, std::uint64_t seed)>;

// Runs trials [0, trials) on up to `threads` workers (0 = hardware
// concurrency). Records come back in trial order, so the output does not
// depend on scheduling. The first exception thrown by a trial is rethrown.
std::vector<TrialRecord> run_trials(std::size_t trials, std::uint64_t master, std::uint64_t cell, std::size_t threads,
                                    const TrialFn& fn);

struct ExperimentResult {
  std::string experiment;
  std::vector<TrialRecord> records;
  nlohmann::json summary;
};

// Writes <dir>/<experiment>.csv and <dir>/<experiment>.summary.json.
void write_results(const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace crfc::experiments
