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

#include "crfc/experiments/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "crfc/errors.hpp"

namespace crfc::experiments {

namespace {

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_row(const TrialRecord& r) {
  char metric[64];
  std::snprintf(metric, sizeof metric, "%.6f", r.metric);
  std::string out;
  out += field(r.experiment) + ',' + field(r.cell) + ',' + std::to_string(r.trial) + ',' + std::to_string(r.trial_seed);
  out += ',' + std::to_string(r.k) + ',' + std::to_string(r.m) + ',' + std::to_string(r.epsilon) + ',' +
         std::to_string(r.f);
  out += ',' + field(r.param) + ',' + field(r.outcome);
  out += ',' + std::to_string(r.corrupted) + ',' + std::to_string(r.satisfied) + ',' + std::to_string(r.iterations);
  out += ',' + std::string(metric) + ',' + std::to_string(r.elapsed_us);
  return out;
}

std::string to_csv(std::span<const TrialRecord> records) {
  std::string out = std::string(kCsvHeader) + '\n';
  for (const auto& r : records) out += csv_row(r) + '\n';
  return out;
}

std::vector<TrialRecord> run_trials(std::size_t trials, std::uint64_t master, std::uint64_t cell, std::size_t threads,
                                    const TrialFn& fn) {
  std::vector<TrialRecord> records(trials);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(trials, 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const auto t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        const auto seed = trial_seed(master, cell, t);
        const auto start = std::chrono::steady_clock::now();
        auto r = fn(t, seed);
        r.elapsed_us =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        r.trial = t;
        r.trial_seed = seed;
        records[t] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = trials;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_results(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto base = dir / result.experiment;
  std::ofstream csv(base.string() + ".csv", std::ios::binary);
  std::ofstream json(base.string() + ".summary.json", std::ios::binary);
  if (!csv || !json) throw UsageError("cannot write results under " + dir.string());
  csv << to_csv(result.records);
  json << result.summary.dump(2) << '\n';
}

}  // namespace crfc::experiments
