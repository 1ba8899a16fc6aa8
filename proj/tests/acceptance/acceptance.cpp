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

// Acceptance checks. Each criterion prints one PASS/FAIL line; tolerances are
// fixed below. Exit status is nonzero if any selected criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "crfc/adversary/attacks.hpp"
#include "crfc/coding/encoder.hpp"
#include "crfc/decoders/decoders.hpp"
#include "crfc/decoders/plan.hpp"
#include "crfc/experiments/experiments.hpp"
#include "crfc/experiments/stats.hpp"
#include "crfc/gf2/ensembles.hpp"
#include "crfc/lt/belief_propagation.hpp"
#include "crfc/lt/degree_distribution.hpp"
#include "crfc/lt/lt_codec.hpp"

namespace {

using namespace crfc;
using experiments::Config;
using nlohmann::json;

// Tolerances.
constexpr double kSigmaBand = 3.0;          // criteria 1, 2
constexpr double kSquareLimit = 0.7112;     // criterion 3
constexpr double kSquareTol = 0.01;
constexpr double kOddTol = 0.005;           // criterion 4
constexpr double kFeasibleMin = 0.45;       // criterion 6
constexpr double kSmallRecoveryMin = 0.99;  // criterion 8
constexpr double kIterationFactor = 2.0;    // criterion 10

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

std::size_t g_threads = 0;

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Config config(std::string text) {
  text += "\nthreads = " + std::to_string(g_threads) + "\n";
  return Config::parse(text);
}

// The lower end of the z = 3 Wilson interval for the failure rate may not
// exceed 2^-eps.
Verdict rank_bound(const std::string& ensemble_lines) {
  const auto r = experiments::run_rank_experiment(
      config(ensemble_lines + "\nepsilon = [2, 4, 8]\ntrials = 100000\nseed = 101"));
  Verdict v{true, {}};
  for (const auto& c : r.summary["cells"]) {
    const std::size_t failures = c["failures"];
    const std::size_t trials = c["trials"];
    const double bound = c["bound"];
    const auto ci = experiments::wilson(failures, trials, kSigmaBand);
    const bool ok = ci.lo <= bound;
    v.pass = v.pass && ok;
    const auto eps = c["rows"].get<std::size_t>() - c["k"].get<std::size_t>();
    v.detail += fmt("eps=%zu rate=%.5f bound=%.5f%s ", eps, c["failure_rate"].get<double>(), bound, ok ? "" : "(over)");
  }
  return v;
}

Verdict c1() { return rank_bound("k = 32\nensemble = uniform"); }

Verdict c2() {
  auto v = rank_bound("k = 64\nensemble = log\nlog_offset = 4");
  v.detail += fmt("p=%.4f", (std::log2(64.0) + 4) / 64);
  return v;
}

Verdict c3() {
  const auto r = experiments::run_rank_experiment(config("k = 64\nepsilon = 0\ntrials = 100000\nseed = 103"));
  const double rate = r.summary["cells"][0]["failure_rate"];
  return {std::abs(rate - kSquareLimit) <= kSquareTol, fmt("rate=%.4f target=%.4f+-%.2f", rate, kSquareLimit, kSquareTol)};
}

Verdict c4() {
  const std::size_t k = 1000;
  Rng rng(104);
  const double frac = lt::odd_degree_fraction(lt::DegreeDistribution::ideal_soliton(k), 1000000, rng);
  const double target = 1.0 / k + 1 - std::log(2.0);
  return {std::abs(frac - target) <= kOddTol, fmt("fraction=%.5f target=%.5f+-%.3f", frac, target, kOddTol)};
}

// Every symbol peeled from odd-attacked packets must be the complement of the truth.
Verdict c5() {
  Verdict v{true, {}};
  for (const std::size_t k : {10, 50, 200}) {
    const auto dist = lt::DegreeDistribution::robust_soliton(k, 0.1, 0.05);
    std::size_t clean_trials = 0;
    std::size_t decoded = 0;
    for (std::size_t t = 0; t < 100; ++t) {
      Rng rng(derive_seed(105, k * 1000 + t));
      const auto symbols = gf2::random_matrix(k, 16, gf2::Ensemble::uniform(), rng).row_data();
      std::vector<lt::LtPacket> stream;
      for (std::size_t i = 0; i < 2 * k; ++i) stream.push_back(lt::lt_encode(symbols, dist, rng));
      const auto r = lt::bp_decode(adversary::odd_packets_attack(stream), k);
      bool all = true;
      for (std::size_t s = 0; s < k; ++s) {
        if (!r.symbols[s]) continue;
        ++decoded;
        auto expect = symbols[s];
        expect.complement();
        all = all && *r.symbols[s] == expect;
      }
      clean_trials += all;
    }
    v.pass = v.pass && clean_trials == 100;
    v.detail += fmt("k=%zu %zu/100 (decoded %zu) ", k, clean_trials, decoded);
  }
  return v;
}

Verdict c6() {
  const auto r = experiments::run_attack_campaign(
      config("attack = odd\nk = 1000\npackets = 2000\nc = 1/3\ndecode = false\ntrials = 1000\nseed = 106"));
  const auto& c = r.summary["cells"][0];
  const double rate = c["feasibility_rate"];
  return {rate >= kFeasibleMin, fmt("feasible=%.3f (min %.2f) odd_mass=%.4f spike=%d", rate, kFeasibleMin,
                                    c["odd_mass"].get<double>(), c["spike"].get<int>())};
}

Verdict c7() {
  const auto r = experiments::run_attack_campaign(config("attack = vanish\nk = 100\ntrials = 100\nseed = 107"));
  const auto& c = r.summary["cells"][0];
  const double rate = c["unrecovered_rate"];
  return {rate == 1.0, fmt("unrecovered=%.2f containing=%.4f estimate=%.4f", rate, c["mean_target_fraction"].get<double>(),
                           c["target_fraction_estimate"].get<double>())};
}

std::size_t outcome_count(const json& cell, const char* name) {
  const auto& o = cell["outcomes"];
  return o.contains(name) ? o[name].get<std::size_t>() : 0;
}

Verdict c8() {
  const auto r = experiments::run_decoder_benchmark(
      config("decoder = exhaustive\nk = 12\nf = 3\nepsilon = 4\nselection = uniform\ntrials = 1000\nseed = 108"));
  const auto& c = r.summary["cells"][0];
  const double rate = c["success_rate"];
  const auto wrong = outcome_count(c, "wrong-block");
  std::ostringstream hist;
  for (const auto& [k, n] : c["outcomes"].items()) hist << k << '=' << n.get<std::size_t>() << ' ';
  return {rate >= kSmallRecoveryMin && wrong == 0,
          fmt("recovered=%.3f (min %.2f) packets=%zu %s", rate, kSmallRecoveryMin,
              c["plan"]["packets"].get<std::size_t>(), hist.str().c_str())};
}

Verdict c9() {
  const auto r = experiments::run_decoder_benchmark(config(
      "decoder = exhaustive\nk = 24\nb = 1\nepsilon = 0\nselection = selective\nknowledge = offline\n"
      "policy = [arrival, reverse, random, sparsest, densest, aligned-random, aligned-unit, aligned-pair]\n"
      "trials = 200\nseed = 109"));
  Verdict v{true, {}};
  std::size_t worst = 200;
  for (const auto& c : r.summary["cells"]) {
    const std::size_t s = c["successes"];
    worst = std::min(worst, s);
  }
  v.pass = worst == 200 && r.summary["cells"].size() == 8;
  const auto& plan = r.summary["cells"][0]["plan"];
  v.detail = fmt("worst policy %zu/200 a=%g packets=%zu threshold=%zu bound=2^%.2f", worst, plan["a"].get<double>(),
                 plan["packets"].get<std::size_t>(), plan["acceptance_threshold"].get<std::size_t>(),
                 plan["failure_bound_log2"].get<double>());
  return v;
}

Verdict c10() {
  const auto r = experiments::run_decoder_benchmark(
      config("decoder = randomized\nk = 64\nf = 4\nepsilon = 8\ntrials = 500\nseed = 110"));
  const auto& c = r.summary["cells"][0];
  const double mean = c["mean_iterations"];
  const double predicted = c["plan"]["predicted_iterations"];
  const std::size_t g = c["plan"]["g"];
  const bool ok = g == 289 && mean >= predicted / kIterationFactor && mean <= predicted * kIterationFactor &&
                  c["success_rate"].get<double>() == 1.0;
  return {ok, fmt("g=%zu mean=%.3f predicted=%.3f recovered=%.3f", g, mean, predicted, c["success_rate"].get<double>())};
}

// Two of the five disjoint sets carry one flipped packet each.
Verdict c11() {
  const std::size_t k = 16;
  const std::size_t f = 2;
  std::size_t good = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    Rng rng(derive_seed(111, t));
    const auto blocks = gf2::random_matrix(2, k, gf2::Ensemble::uniform(), rng).row_data();
    std::vector<coding::Packet> packets;
    for (std::size_t i = 0; i < 120; ++i) {
      packets.push_back(
          coding::generate_packet(blocks, coding::CodingDistribution::uniform(), coding::HeaderForm::kDense, rng));
    }
    const auto sets = decoders::majority_sets(decoders::DecodeInput::from_packets(packets).coefficients(), 2 * f + 1);
    if (sets.size() != 2 * f + 1) continue;
    for (const std::size_t s : {0U, 2U}) packets[sets[s][rng.uniform_below(sets[s].size())]].payload.complement();
    const auto in = decoders::DecodeInput::from_packets(packets);
    bool all = true;
    for (std::size_t l = 0; l < 2; ++l) {
      const auto o = decoders::majority_decode(in, l, f);
      all = all && o.ok() && *o.block == blocks[l];
    }
    good += all;
  }
  bool edges = true;
  for (const std::size_t n : {50, 100, 1000}) {
    const double edge = 1.0 / (2.0 * k) - 1.0 / (2.0 * static_cast<double>(n));
    edges = edges && decoders::majority_applicable(edge, k, n) && !decoders::majority_applicable(edge + 1e-9, k, n) &&
            !decoders::majority_applicable(1.0 / 3, k, n);
  }
  return {good == 100 && edges, fmt("fixtures %zu/100 applicability-edges %s", good, edges ? "ok" : "wrong")};
}

Verdict c12() {
  const auto r = experiments::run_decoder_benchmark(
      config("decoder = cross\nk = [6, 9, 12]\nf = 2\nepsilon = 4\ntrials = 200\nseed = 112"));
  Verdict v{true, {}};
  for (const auto& c : r.summary["cells"]) {
    const auto disagree = outcome_count(c, "disagree") + outcome_count(c, "agree-wrong");
    v.pass = v.pass && disagree == 0;
    v.detail += fmt("%s agree=%zu conflict=%zu ", c["cell"].get<std::string>().c_str(), outcome_count(c, "agree"),
                    disagree);
  }
  return v;
}

std::string strip_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::string out;
  std::string line;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

Verdict c13() {
  const std::vector<std::pair<const char*, const char*>> runs = {
      {"rank", "k = 24\nepsilon = [0, 2]\ntrials = 300"},
      {"attack", "attack = odd\nk = 200\ntrials = 50"},
      {"decoder", "decoder = cross\nk = 10\nf = 2\nepsilon = 4\ntrials = 60"},
      {"shared-value", "sources = 9\nbyzantine = [2]\nk = 10\npackets = 120\ntrials = 40"},
  };
  Verdict v{true, {}};
  for (const auto& [kind, text] : runs) {
    const auto base = std::string(text) + "\nseed = 113\n";
    const auto a = experiments::run_experiment(kind, Config::parse(base + "threads = 1\n"));
    const auto b = experiments::run_experiment(kind, Config::parse(base + "threads = 4\n"));
    auto sa = a.summary;
    auto sb = b.summary;
    sa.erase("config");
    sb.erase("config");
    const bool same = strip_timing(experiments::to_csv(a.records)) == strip_timing(experiments::to_csv(b.records)) &&
                      sa == sb && !a.records.empty();
    v.pass = v.pass && same;
    v.detail += fmt("%s=%s ", kind, same ? "identical" : "differs");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "run only these criteria (1-13)");
  app.add_option("--threads", g_threads, "worker threads, 0 for all cores");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "uniform rank failure within 2^-eps", c1},
      {2, "logarithmic-density rank failure within 2^-eps", c2},
      {3, "square uniform matrix singular rate", c3},
      {4, "ideal soliton odd-degree fraction", c4},
      {5, "odd-packet attack complements every decoded symbol", c5},
      {6, "odd-packet attack fits a 1/3 budget", c6},
      {7, "vanishing-symbol attack hides the target", c7},
      {8, "small exhaustive decode under uniform flips", c8},
      {9, "selective planner at b=1 against every victim policy", c9},
      {10, "randomized decoder iteration count", c10},
      {11, "majority decoder fixtures and applicability edge", c11},
      {12, "exhaustive and randomized decoders agree", c12},
      {13, "experiment output is reproducible", c13},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    std::printf("%s criterion %2d: %s | %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
