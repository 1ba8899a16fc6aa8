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

#include "crfc/adversary/attacks.hpp"
#include "crfc/experiments/experiments.hpp"
#include "crfc/experiments/stats.hpp"
#include "crfc/gf2/ensembles.hpp"
#include "crfc/lt/belief_propagation.hpp"
#include "decoder_trial.hpp"
#include "internal.hpp"

namespace crfc::experiments {

namespace {

struct LtCell {
  std::size_t k = 0;
  std::size_t packets = 0;
  std::size_t symbol_bits = 8;
  double rs_c = 0.1;
  double rs_delta = 0.05;
  adversary::CBound c{1, 3};
  adversary::BoundReading reading = adversary::BoundReading::kFinalSet;
  bool decode = true;
};

std::vector<lt::LtPacket> lt_stream(const LtCell& cell, std::vector<gf2::BitVector>& symbols, Rng& rng) {
  symbols = gf2::random_matrix(cell.k, cell.symbol_bits, gf2::Ensemble::uniform(), rng).row_data();
  const auto dist = lt::DegreeDistribution::robust_soliton(cell.k, cell.rs_c, cell.rs_delta);
  std::vector<lt::LtPacket> stream;
  stream.reserve(cell.packets);
  for (std::size_t i = 0; i < cell.packets; ++i) stream.push_back(lt::lt_encode(symbols, dist, rng));
  return stream;
}

// outcome: feasible / infeasible; metric: fraction of decoded symbols that came
// out complemented (feasible trials that were decoded).
TrialRecord odd_trial(const LtCell& cell, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<gf2::BitVector> symbols;
  const auto stream = lt_stream(cell, symbols, rng);
  const auto feas = adversary::attack_feasible(stream, adversary::OddPackets{}, cell.c, cell.reading);
  TrialRecord rec;
  rec.corrupted = feas.required;
  rec.success = feas.feasible;
  rec.outcome = feas.feasible ? "feasible" : "infeasible";
  if (feas.feasible && cell.decode) {
    const auto r = lt::bp_decode(adversary::odd_packets_attack(stream), cell.k);
    std::size_t flipped = 0;
    for (std::size_t s = 0; s < cell.k; ++s) {
      if (!r.symbols[s]) continue;
      auto expect = symbols[s];
      expect.complement();
      flipped += *r.symbols[s] == expect ? 1 : 0;
    }
    rec.satisfied = r.decoded_count();
    rec.metric = r.decoded_count() ? static_cast<double>(flipped) / static_cast<double>(r.decoded_count()) : 0.0;
  }
  return rec;
}

// outcome: target-unrecovered / target-recovered; metric: fraction of packets
// holding the target; satisfied: other symbols recovered.
TrialRecord vanish_trial(const LtCell& cell, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<gf2::BitVector> symbols;
  const auto stream = lt_stream(cell, symbols, rng);
  const auto target = static_cast<std::uint32_t>(rng.uniform_below(cell.k));
  const auto attacked = adversary::vanishing_symbol_attack(stream, target);
  TrialRecord rec;
  rec.corrupted = attacked.edited;
  rec.metric = static_cast<double>(attacked.edited) / static_cast<double>(stream.size());
  const auto r = lt::bp_decode(attacked.packets, cell.k);
  rec.success = !r.symbols[target].has_value();
  rec.outcome = rec.success ? "target-unrecovered" : "target-recovered";
  rec.satisfied = r.decoded_count();
  return rec;
}

}  // namespace

ExperimentResult run_attack_campaign(const Config& config) {
  const auto attack = config.get_string("attack", "odd");
  std::set<std::string> allowed{"experiment", "trials", "seed", "threads", "attack"};
  if (attack == "flip") {
    const auto& dk = detail::decoder_keys();
    allowed.insert(dk.begin(), dk.end());
  } else if (attack == "odd" || attack == "vanish") {
    allowed.insert({"k", "overhead", "packets", "symbol_bits", "rs_c", "rs_delta", "c", "reading", "decode"});
  } else {
    throw ConfigError("attack must be odd, vanish or flip");
  }
  config.reject_unknown(allowed);
  const auto opts = run_options(config);

  ExperimentResult result{"attack", {}, {}};
  result.summary["experiment"] = "attack";
  result.summary["attack"] = attack;
  result.summary["config"] = detail::config_echo(config);
  result.summary["master_seed"] = opts.seed;
  result.summary["cells"] = nlohmann::json::array();

  std::uint64_t cell_index = 0;
  if (attack == "flip") {
    for (const auto& cell : detail::decoder_cells(config)) {
      if (cell.decoder == "bp") throw ConfigError("flip campaigns target the resilient decoders, not bp");
      const auto prepared = detail::prepare(cell);
      const auto name = "flip;" + detail::cell_name(cell);
      auto records = run_trials(opts.trials, opts.seed, cell_index++, opts.threads, [&](std::size_t, std::uint64_t s) {
        auto rec = detail::decoder_trial(prepared, s);
        rec.experiment = "attack";
        rec.cell = name;
        rec.k = cell.k;
        rec.m = cell.m;
        rec.epsilon = cell.epsilon;
        rec.f = prepared.plan.corruptions;
        rec.param = "n=" + std::to_string(prepared.packets);
        return rec;
      });
      std::size_t wrong = 0;
      std::size_t shortfall = 0;
      for (const auto& r : records) {
        wrong += r.outcome == "wrong-block";
        shortfall += r.metric < static_cast<double>(cell.k);
      }
      auto s = detail::summarize_cell(records);
      s["cell"] = name;
      s["plan"] = detail::plan_summary(prepared);
      s["wrong_blocks"] = wrong;
      s["clean_rank_shortfall"] = shortfall;
      result.summary["cells"].push_back(s);
      result.records.insert(result.records.end(), records.begin(), records.end());
    }
    return result;
  }

  for (const auto k : config.get_uint_list("k", {100})) {
    LtCell cell;
    cell.k = k;
    if (k < 2) throw ConfigError("LT campaigns need k >= 2");
    const auto overhead = config.get_double("overhead", 2.0);
    cell.packets = config.get_uint("packets", static_cast<std::uint64_t>(std::ceil(overhead * static_cast<double>(k))));
    cell.symbol_bits = config.get_uint("symbol_bits", 8);
    cell.rs_c = config.get_double("rs_c", 0.1);
    cell.rs_delta = config.get_double("rs_delta", 0.05);
    cell.c = adversary::CBound::parse(config.get_string("c", "1/3"));
    cell.reading = parse_reading(config.get_string("reading", "final-set"));
    cell.decode = config.get_bool("decode", true);

    const std::string name = attack + ";k=" + std::to_string(k) + ";n=" + std::to_string(cell.packets);
    auto records = run_trials(opts.trials, opts.seed, cell_index++, opts.threads, [&](std::size_t, std::uint64_t s) {
      auto rec = attack == "odd" ? odd_trial(cell, s) : vanish_trial(cell, s);
      rec.experiment = "attack";
      rec.cell = name;
      rec.k = k;
      rec.m = cell.packets;
      rec.param = "c=" + cell.c.to_string();
      return rec;
    });

    auto s = detail::summarize_cell(records);
    s["cell"] = name;
    s["k"] = k;
    s["packets"] = cell.packets;
    if (attack == "odd") {
      const auto dist = lt::DegreeDistribution::robust_soliton(k, cell.rs_c, cell.rs_delta);
      s["feasibility_rate"] = s["success_rate"];
      s["odd_mass"] = dist.odd_mass();
      s["spike"] = dist.spike();
      double complemented = 0;
      std::size_t decoded = 0;
      for (const auto& r : records) {
        if (r.success && cell.decode) {
          complemented += r.metric;
          ++decoded;
        }
      }
      s["mean_complemented_fraction"] = decoded ? complemented / static_cast<double>(decoded) : 0.0;
    } else {
      double others = 0;
      for (const auto& r : records) others += static_cast<double>(r.satisfied) / static_cast<double>(k - 1);
      s["unrecovered_rate"] = s["success_rate"];
      s["mean_target_fraction"] = s["mean_metric"];
      s["target_fraction_estimate"] = std::log(static_cast<double>(k) / cell.rs_delta) / static_cast<double>(k);
      s["mean_other_recovery"] = others / static_cast<double>(records.size());
    }
    result.summary["cells"].push_back(s);
    result.records.insert(result.records.end(), records.begin(), records.end());
  }
  return result;
}

}  // namespace crfc::experiments
