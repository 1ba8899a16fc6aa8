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

#include "crfc/adversary/channel.hpp"
#include "crfc/coding/encoder.hpp"
#include "crfc/experiments/experiments.hpp"
#include "crfc/gf2/ensembles.hpp"
#include "crfc/gf2/linear_system.hpp"
#include "crfc/lt/belief_propagation.hpp"
#include "decoder_trial.hpp"
#include "internal.hpp"

namespace crfc::experiments {

namespace detail {

const std::set<std::string>& decoder_keys() {
  static const std::set<std::string> keys{
      "decoder", "k", "f", "epsilon", "b", "m", "g", "b_param", "packets", "acceptance", "selection", "knowledge",
      "policy", "reading", "mask", "iteration_cap", "overhead", "rs_c", "rs_delta", "step"};
  return keys;
}

std::vector<DecoderCell> decoder_cells(const Config& config) {
  const auto decoder = config.get_string("decoder", "exhaustive");
  if (decoder != "majority" && decoder != "exhaustive" && decoder != "randomized" && decoder != "cross" &&
      decoder != "bp") {
    throw ConfigError("decoder must be majority, exhaustive, randomized, cross or bp");
  }
  DecoderCell base;
  base.decoder = decoder;
  base.m = config.get_uint("m", 1);
  base.g = config.get_uint("g", 0);
  base.b_param = config.get_double("b_param", 2.0);
  base.packets = config.get_uint("packets", 0);
  base.acceptance = parse_acceptance(config.get_string("acceptance", "all-but-f"));
  parse_adversary_kind(config.get_string("selection", "uniform") + ":" + config.get_string("knowledge", "offline"),
                       base.selection, base.knowledge);
  base.reading = parse_reading(config.get_string("reading", "final-set"));
  base.mask = parse_mask(config.get_string("mask", "complement"));
  base.iteration_cap = config.get_uint("iteration_cap", 0);
  base.overhead = config.get_double("overhead", 2.0);
  base.rs_c = config.get_double("rs_c", 0.1);
  base.rs_delta = config.get_double("rs_delta", 0.05);
  base.step = config.get_double("step", 0.5);
  if (base.m == 0) throw ConfigError("m must be positive");

  const auto ks = config.get_uint_list("k", {12});
  const auto fs = config.get_uint_list("f", {0});
  const auto eps = config.get_uint_list("epsilon", {4});
  const auto bs = config.get_double_list("b", {});
  std::vector<std::string> policies = config.get_string_list("policy", {"arrival"});
  if (base.selection == adversary::Selection::kUniform) policies = {"arrival"};

  std::vector<DecoderCell> cells;
  for (const auto k : ks) {
    for (const auto e : eps) {
      for (const auto& pol : policies) {
        auto add = [&](DecoderCell c) {
          c.k = k;
          c.epsilon = e;
          c.policy = parse_policy(pol);
          cells.push_back(c);
        };
        if (!bs.empty()) {
          for (const auto b : bs) {
            auto c = base;
            c.selective_b = b;
            add(c);
          }
        } else {
          for (const auto f : fs) {
            auto c = base;
            c.f = f;
            add(c);
          }
        }
      }
    }
  }
  return cells;
}

std::string cell_name(const DecoderCell& c) {
  std::string s = c.decoder + ";k=" + std::to_string(c.k) + ";eps=" + std::to_string(c.epsilon);
  if (c.selective_b) {
    s += ";b=" + fmt_double(*c.selective_b);
  } else {
    s += ";f=" + std::to_string(c.f);
  }
  if (c.selection == adversary::Selection::kSelective) s += ";policy=" + std::string(adversary::policy_name(c.policy));
  return s;
}

PreparedCell prepare(const DecoderCell& c) {
  PreparedCell p;
  p.cell = c;
  if (c.k == 0) throw ConfigError("k must be positive");
  if (c.decoder == "bp") {
    p.packets = c.packets ? c.packets : static_cast<std::size_t>(std::ceil(c.overhead * static_cast<double>(c.k)));
    return p;
  }
  if (c.selective_b) {
    p.plan = decoders::plan_selective(c.k, *c.selective_b, c.step);
    p.plan.epsilon = c.epsilon;
  } else {
    p.plan = decoders::plan_uniform(c.k, c.f, c.epsilon);
  }
  const auto f = p.plan.corruptions;
  p.packets = p.plan.required_packets;
  if (c.decoder == "randomized" || c.decoder == "cross") {
    p.g = c.g ? c.g : decoders::choose_g(c.k, f, c.epsilon, c.b_param);
    p.packets = p.g + c.k + f + c.epsilon;
    p.predicted_iterations = decoders::predicted_iterations(c.k, f, c.epsilon, p.g);
  } else if (c.decoder == "majority") {
    p.packets = (2 * f + 1) * (c.k + c.epsilon);
  }
  if (c.packets) p.packets = c.packets;
  return p;
}

namespace {

TrialRecord bp_trial(const PreparedCell& p, std::uint64_t seed) {
  const auto& c = p.cell;
  Rng rng(seed);
  const auto symbols = gf2::random_matrix(c.k, 8, gf2::Ensemble::uniform(), rng).row_data();
  const auto dist = lt::DegreeDistribution::robust_soliton(c.k, c.rs_c, c.rs_delta);
  std::vector<lt::LtPacket> stream;
  for (std::size_t i = 0; i < p.packets; ++i) stream.push_back(lt::lt_encode(symbols, dist, rng));
  const auto r = lt::bp_decode(stream, c.k);
  TrialRecord rec;
  rec.success = r.complete;
  rec.outcome = r.complete ? "recovered" : "stalled";
  rec.satisfied = r.decoded_count();
  rec.iterations = r.decoded_count();
  rec.metric = static_cast<double>(r.decoded_count()) / static_cast<double>(c.k);
  return rec;
}

std::string label(const decoders::MultiDecodeOutcome& out, const std::vector<gf2::BitVector>& truth) {
  if (out.ok()) return out.values() == truth ? "recovered" : "wrong-block";
  return std::string(decoders::outcome_name(out.first_failure()));
}

}  // namespace

TrialRecord decoder_trial(const PreparedCell& p, std::uint64_t seed) {
  const auto& c = p.cell;
  if (c.decoder == "bp") return bp_trial(p, seed);

  Rng rng(seed);
  const auto blocks = gf2::random_matrix(c.m, c.k, gf2::Ensemble::uniform(), rng).row_data();
  std::vector<coding::Packet> stream;
  stream.reserve(p.packets);
  for (std::size_t i = 0; i < p.packets; ++i) {
    stream.push_back(
        coding::generate_packet(blocks, coding::CodingDistribution::uniform(), coding::HeaderForm::kDense, rng));
  }

  const auto f = p.plan.corruptions;
  std::vector<std::uint8_t> corrupted(stream.size(), 0);
  if (f > 0) {
    adversary::AdversarySpec spec;
    spec.knowledge = c.knowledge;
    spec.selection = c.selection;
    spec.bound = adversary::CBound(f, stream.size());
    spec.strategy = adversary::PayloadFlip{c.mask};
    spec.reading = c.reading;
    spec.policy = c.policy;
    spec.max_corruptions = f;
    auto delivery = adversary::transmit(stream, spec, rng);
    stream = std::move(delivery.packets);
    corrupted = std::move(delivery.corrupted);
  }

  const auto input = decoders::DecodeInput::from_packets(stream);
  gf2::IncrementalBasis clean(c.k);
  std::size_t n_corrupted = 0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    n_corrupted += corrupted[i];
    if (!corrupted[i]) clean.insert(input.coefficients().row(i));
  }

  TrialRecord rec;
  rec.corrupted = n_corrupted;
  rec.metric = static_cast<double>(clean.rank());

  decoders::DecodeAllOptions options;
  options.acceptance = c.acceptance;
  options.iteration_cap = c.iteration_cap;

  auto stats_of = [](const decoders::MultiDecodeOutcome& out, TrialRecord& r) {
    r.satisfied = out.blocks.front().stats.satisfied;
    for (const auto& b : out.blocks) r.iterations = std::max(r.iterations, b.stats.iterations);
  };

  if (c.decoder == "cross") {
    const auto ex = decoders::decode_all_blocks(input, p.plan, decoders::Algorithm::kExhaustive, rng, options);
    const auto rnd = decoders::decode_all_blocks(input, p.plan, decoders::Algorithm::kRandomized, rng, options);
    stats_of(rnd, rec);
    if (ex.ok() && rnd.ok()) {
      const bool agree = ex.values() == rnd.values();
      const bool truthful = ex.values() == blocks;
      rec.outcome = agree ? (truthful ? "agree" : "agree-wrong") : "disagree";
      rec.success = agree && truthful;
    } else {
      rec.outcome = ex.ok() ? "exhaustive-only" : (rnd.ok() ? "randomized-only" : "neither");
      rec.success = false;
    }
    return rec;
  }

  const auto out = decoders::decode_all_blocks(input, p.plan, parse_algorithm(c.decoder), rng, options);
  stats_of(out, rec);
  rec.outcome = label(out, blocks);
  rec.success = rec.outcome == "recovered";
  return rec;
}

nlohmann::json plan_summary(const PreparedCell& p) {
  nlohmann::json s;
  s["packets"] = p.packets;
  if (p.cell.decoder == "bp") return s;
  s["required_packets"] = p.plan.required_packets;
  s["fixed_threshold"] = p.plan.threshold;
  s["acceptance_threshold"] = p.plan.acceptance_threshold(p.packets, p.cell.acceptance);
  s["corruptions"] = p.plan.corruptions;
  s["implied_c"] = p.plan.implied_c();
  if (const auto* sel = std::get_if<decoders::SelectiveModel>(&p.plan.model)) {
    s["a"] = sel->a;
    s["b"] = sel->b;
    s["exponent"] = decoders::selective_exponent(sel->a, sel->b);
    s["failure_bound_log2"] = decoders::selective_failure_log2(p.plan.k, sel->a, sel->b);
  }
  if (p.g) {
    s["g"] = p.g;
    s["predicted_iterations"] = p.predicted_iterations;
  }
  return s;
}

}  // namespace detail

ExperimentResult run_decoder_benchmark(const Config& config) {
  auto allowed = detail::decoder_keys();
  allowed.insert({"experiment", "trials", "seed", "threads"});
  config.reject_unknown(allowed);
  const auto opts = run_options(config);

  ExperimentResult result{"decoder", {}, {}};
  result.summary["experiment"] = "decoder";
  result.summary["config"] = detail::config_echo(config);
  result.summary["master_seed"] = opts.seed;
  result.summary["cells"] = nlohmann::json::array();

  std::uint64_t cell_index = 0;
  for (const auto& cell : detail::decoder_cells(config)) {
    const auto prepared = detail::prepare(cell);
    const auto name = detail::cell_name(cell);
    auto records = run_trials(opts.trials, opts.seed, cell_index++, opts.threads, [&](std::size_t, std::uint64_t s) {
      auto rec = detail::decoder_trial(prepared, s);
      rec.experiment = "decoder";
      rec.cell = name;
      rec.k = cell.k;
      rec.m = cell.m;
      rec.epsilon = cell.epsilon;
      rec.f = prepared.plan.corruptions;
      rec.param = "n=" + std::to_string(prepared.packets);
      return rec;
    });
    auto s = detail::summarize_cell(records);
    s["cell"] = name;
    s["plan"] = detail::plan_summary(prepared);
    result.summary["cells"].push_back(s);
    result.records.insert(result.records.end(), records.begin(), records.end());
  }
  return result;
}

}  // namespace crfc::experiments
