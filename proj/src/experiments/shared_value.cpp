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

#include "crfc/adversary/channel.hpp"
#include "crfc/coding/encoder.hpp"
#include "crfc/experiments/experiments.hpp"
#include "crfc/gf2/ensembles.hpp"
#include "internal.hpp"

namespace crfc::experiments {

ExperimentResult run_shared_value_scenario(const Config& config) {
  config.reject_unknown({"experiment", "trials", "seed", "threads", "sources", "byzantine", "k", "m", "packets",
                         "c_assumed", "decoder", "epsilon"});
  const auto opts = run_options(config);
  const auto sources = config.get_uint("sources", 10);
  const auto byzantine = config.get_uint_list("byzantine", {3});
  const auto k = config.get_uint("k", 12);
  const auto m = config.get_uint("m", 1);
  const auto n = config.get_uint("packets", 300);
  const auto c = adversary::CBound::parse(config.get_string("c_assumed", "1/3"));
  const auto algorithm = parse_algorithm(config.get_string("decoder", "exhaustive"));
  const auto epsilon = config.get_uint("epsilon", 4);
  if (sources == 0) throw ConfigError("sources must be positive");
  if (k == 0 || m == 0) throw ConfigError("k and m must be positive");
  if (algorithm == decoders::Algorithm::kMajority) throw ConfigError("shared-value decodes with exhaustive or randomized");

  // The receiver only knows it will tolerate a c_assumed share of bad packets.
  decoders::DecodePlan plan;
  plan.k = k;
  plan.corruptions = c.budget(n);
  plan.model = decoders::UniformModel{plan.corruptions};
  plan.epsilon = epsilon;
  plan.required_packets = n;
  plan.threshold = n - plan.corruptions;

  ExperimentResult result{"shared-value", {}, {}};
  result.summary["experiment"] = "shared-value";
  result.summary["config"] = detail::config_echo(config);
  result.summary["master_seed"] = opts.seed;
  result.summary["assumed_f"] = plan.corruptions;
  result.summary["acceptance_threshold"] = plan.threshold;
  result.summary["cells"] = nlohmann::json::array();

  std::uint64_t cell_index = 0;
  for (const auto bad : byzantine) {
    if (bad > sources) throw ConfigError("more Byzantine sources than sources");
    const std::string name = "sources=" + std::to_string(sources) + ";byzantine=" + std::to_string(bad);
    auto records = run_trials(opts.trials, opts.seed, cell_index++, opts.threads, [&](std::size_t, std::uint64_t seed) {
      Rng rng(seed);
      const auto blocks = gf2::random_matrix(m, k, gf2::Ensemble::uniform(), rng).row_data();
      std::vector<Rng> encoders;
      for (std::size_t s = 0; s < sources; ++s) encoders.emplace_back(derive_seed(seed, s + 1));
      std::vector<std::size_t> order(sources);
      std::iota(order.begin(), order.end(), 0);
      partial_shuffle(std::span<std::size_t>(order), bad, rng);
      std::vector<std::uint8_t> is_bad(sources, 0);
      for (std::size_t i = 0; i < bad; ++i) is_bad[order[i]] = 1;

      // Round-robin interleaving; Byzantine sources flood complemented payloads.
      std::vector<coding::Packet> packets;
      std::size_t corrupted = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto src = i % sources;
        auto p = coding::generate_packet(blocks, coding::CodingDistribution::uniform(), coding::HeaderForm::kDense,
                                         encoders[src]);
        if (is_bad[src]) {
          p.payload.complement();
          ++corrupted;
        }
        packets.push_back(std::move(p));
      }

      const auto out =
          decoders::decode_all_blocks(decoders::DecodeInput::from_packets(packets), plan, algorithm, rng);
      TrialRecord rec;
      rec.experiment = "shared-value";
      rec.cell = name;
      rec.k = k;
      rec.m = m;
      rec.epsilon = epsilon;
      rec.f = plan.corruptions;
      rec.param = "n=" + std::to_string(n);
      rec.corrupted = corrupted;
      rec.satisfied = out.blocks.front().stats.satisfied;
      for (const auto& b : out.blocks) rec.iterations = std::max(rec.iterations, b.stats.iterations);
      if (out.ok()) {
        rec.outcome = out.values() == blocks ? "recovered" : "wrong-block";
      } else {
        rec.outcome = std::string(decoders::outcome_name(out.first_failure()));
      }
      rec.success = rec.outcome == "recovered";
      rec.metric = static_cast<double>(corrupted) / static_cast<double>(n);
      return rec;
    });
    std::size_t wrong = 0;
    for (const auto& r : records) wrong += r.outcome == "wrong-block";
    auto s = detail::summarize_cell(records);
    s["cell"] = name;
    s["byzantine_sources"] = bad;
    s["byzantine_fraction"] = static_cast<double>(bad) / static_cast<double>(sources);
    s["wrong_blocks"] = wrong;
    result.summary["cells"].push_back(s);
    result.records.insert(result.records.end(), records.begin(), records.end());
  }
  return result;
}

}  // namespace crfc::experiments
