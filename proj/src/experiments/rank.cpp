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

#include <cmath>

#include "crfc/experiments/experiments.hpp"
#include "crfc/experiments/stats.hpp"
#include "crfc/gf2/ensembles.hpp"
#include "crfc/gf2/linear_system.hpp"
#include "internal.hpp"

namespace crfc::experiments {

ExperimentResult run_rank_experiment(const Config& config) {
  config.reject_unknown({"experiment", "trials", "seed", "threads", "k", "epsilon", "ensemble", "p", "log_offset"});
  const auto opts = run_options(config);
  const auto ks = config.get_uint_list("k", {32});
  const auto epsilons = config.get_uint_list("epsilon", {2, 4, 8});
  const auto ensemble = config.get_string("ensemble", "uniform");
  if (ensemble != "uniform" && ensemble != "bernoulli" && ensemble != "log") {
    throw ConfigError("ensemble must be uniform, bernoulli or log");
  }
  const auto fixed_p = config.get_double("p", 0.5);
  const auto log_offset = config.get_double("log_offset", 4.0);

  ExperimentResult result{"rank", {}, {}};
  result.summary["experiment"] = "rank";
  result.summary["config"] = detail::config_echo(config);
  result.summary["master_seed"] = opts.seed;
  result.summary["cells"] = nlohmann::json::array();

  std::uint64_t cell = 0;
  for (const auto k : ks) {
    if (k == 0) throw ConfigError("k must be positive");
    double p = 0.5;
    if (ensemble == "bernoulli") p = fixed_p;
    if (ensemble == "log") p = (std::log2(static_cast<double>(k)) + log_offset) / static_cast<double>(k);
    if (ensemble != "uniform" && !(p > 0 && p < 1)) {
      throw ConfigError("density " + detail::fmt_double(p) + " outside (0, 1) at k=" + std::to_string(k));
    }
    const auto ens = ensemble == "uniform" ? gf2::Ensemble::uniform() : gf2::Ensemble::bernoulli(p);

    for (const auto eps : epsilons) {
      const std::string name = "k=" + std::to_string(k) + ";eps=" + std::to_string(eps);
      auto records = run_trials(opts.trials, opts.seed, cell++, opts.threads, [&](std::size_t, std::uint64_t seed) {
        Rng rng(seed);
        const auto r = gf2::rank(gf2::random_matrix(k + eps, k, ens, rng));
        TrialRecord rec;
        rec.experiment = "rank";
        rec.cell = name;
        rec.k = k;
        rec.m = k + eps;
        rec.epsilon = eps;
        rec.param = ensemble == "uniform" ? "uniform" : "p=" + detail::fmt_double(p);
        rec.success = r == k;
        rec.outcome = rec.success ? "full" : "deficient";
        rec.metric = static_cast<double>(r);
        return rec;
      });

      std::size_t failures = 0;
      for (const auto& r : records) failures += r.success ? 0 : 1;
      const double rate = static_cast<double>(failures) / static_cast<double>(opts.trials);
      const double bound = std::ldexp(1.0, -static_cast<int>(eps));
      const auto ci = wilson(failures, opts.trials);
      auto s = detail::summarize_cell(records);
      s["cell"] = name;
      s["k"] = k;
      s["rows"] = k + eps;
      s["density"] = p;
      s["failures"] = failures;
      s["failure_rate"] = rate;
      s["failure_wilson95"] = {ci.lo, ci.hi};
      s["failure_sigma"] = binomial_sigma(rate, opts.trials);
      s["bound"] = bound;
      s["limit"] = gf2::rank_failure_limit(eps);
      result.summary["cells"].push_back(s);
      result.records.insert(result.records.end(), records.begin(), records.end());
    }
  }
  return result;
}

}  // namespace crfc::experiments
