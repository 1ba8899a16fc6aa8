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

#include <gtest/gtest.h>

#include <cmath>

#include "crfc/coding/encoder.hpp"
#include "crfc/decoders/decoders.hpp"
#include "crfc/decoders/plan.hpp"
#include "crfc/errors.hpp"
#include "crfc/gf2/ensembles.hpp"
#include "crfc/gf2/kernels.hpp"
#include "crfc/gf2/linear_system.hpp"

namespace crfc::decoders {
namespace {

namespace kernels = gf2::kernels;

struct Fixture {
  std::vector<BitVector> blocks;
  std::vector<coding::Packet> packets;
  std::vector<std::uint8_t> corrupted;
};

// n uniform dense packets over m random blocks; `bad` packets chosen at random
// get every payload bit flipped.
Fixture make_fixture(std::size_t k, std::size_t m, std::size_t n, std::size_t bad, Rng& rng) {
  Fixture fx;
  fx.blocks = gf2::random_matrix(m, k, gf2::Ensemble::uniform(), rng).row_data();
  for (std::size_t i = 0; i < n; ++i) {
    fx.packets.push_back(
        coding::generate_packet(fx.blocks, coding::CodingDistribution::uniform(), coding::HeaderForm::kDense, rng));
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  partial_shuffle(std::span<std::size_t>(idx), bad, rng);
  fx.corrupted.assign(n, 0);
  for (std::size_t i = 0; i < bad; ++i) {
    fx.packets[idx[i]].payload.complement();
    fx.corrupted[idx[i]] = 1;
  }
  return fx;
}

double entropy_oracle(double p) { return -(p * std::log(p) + (1 - p) * std::log(1 - p)) / std::log(2.0); }

TEST(PlanTest, Uniform) {
  const auto zero = plan_uniform(10, 0, 3);
  EXPECT_EQ(zero.required_packets, 13U);
  EXPECT_EQ(zero.threshold, 13U);

  const auto p = plan_uniform(12, 3, 4);
  EXPECT_EQ(p.required_packets, 22U);
  EXPECT_EQ(p.threshold, 19U);
  EXPECT_EQ(p.acceptance_threshold(22, Acceptance::kAllButF), 19U);
  EXPECT_EQ(p.acceptance_threshold(40, Acceptance::kAllButF), 37U);
  EXPECT_EQ(p.acceptance_threshold(40, Acceptance::kFixedThreshold), 19U);

  EXPECT_THROW(plan_uniform(12, 12, 4), PlanningError);
  EXPECT_THROW(plan_uniform(12, 3, 0), PlanningError);
}

TEST(PlanTest, ImpliedCBelowOneThird) {
  for (std::size_t k = 1; k <= 40; ++k) {
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t e = 1; e <= 10; ++e) EXPECT_LT(plan_uniform(k, f, e).implied_c(), 1.0 / 3);
    }
  }
}

TEST(PlanTest, SelectiveExponent) {
  const double direct = 7 - 1 - 1 - 7 * entropy_oracle(1.0 / 7);
  EXPECT_NEAR(selective_exponent(7, 1), direct, 1e-12);
  EXPECT_NEAR(direct, 0.858, 0.001);
  EXPECT_NEAR(selective_failure_log2(24, 7, 1), -24 * direct, 1e-9);

  const auto p = plan_selective(24, 1);
  const auto& model = std::get<SelectiveModel>(p.model);
  EXPECT_DOUBLE_EQ(model.a, 6.0);
  EXPECT_GT(selective_exponent(model.a, 1), 0);
  EXPECT_LE(selective_exponent(model.a - 0.5, 1), 0);
  EXPECT_EQ(p.required_packets, 168U);
  EXPECT_EQ(p.threshold, 144U);
  EXPECT_EQ(p.corruptions, 24U);
}

// d/da = 1 + log2(1 - b/a): decreasing on (b, 2b), increasing after. The
// exponent is negative on the whole decreasing stretch, so the first positive
// grid point lies in the increasing part.
TEST(PlanTest, ExponentShapeOnGrid) {
  for (double b : {0.25, 0.5, 1.0, 2.0, 3.5}) {
    double prev = -1e300;
    for (double a = std::floor(b / 0.5) * 0.5 + 0.5; a <= 40; a += 0.5) {
      const double e = selective_exponent(a, b);
      if (a <= 2 * b) {
        EXPECT_LT(e, 0) << "a=" << a << " b=" << b;
      } else {
        EXPECT_GT(e, prev) << "a=" << a << " b=" << b;
      }
      if (a >= 2 * b) prev = e;
    }
    const auto p = plan_selective(10, b);
    EXPECT_GT(selective_exponent(std::get<SelectiveModel>(p.model).a, b), 0);
  }
}

TEST(PlanTest, MajorityApplicability) {
  const double edge = 1.0 / 32 - 1.0 / 200;
  EXPECT_TRUE(majority_applicable(edge, 16, 100));
  EXPECT_FALSE(majority_applicable(edge + 1e-9, 16, 100));
  EXPECT_FALSE(majority_applicable(0.2, 16, 100));
}

TEST(PlanTest, RandomizedHelpers) {
  EXPECT_EQ(choose_g(64, 4, 8), 289U);
  EXPECT_EQ(choose_g(64, 0, 8), 1U);
  EXPECT_NEAR(predicted_iterations(64, 4, 8, 289), 1.0 / (std::exp(-288.0 / 289) * (1 - 1.0 / 256)), 1e-12);
  EXPECT_GT(clean_subset_lower_bound(64, 4, 8, 289), 1.0 / 3);
}

TEST(DecodeInputTest, SatisfiedMatchesPerRowCount) {
  Rng rng(70);
  const auto fx = make_fixture(20, 3, 60, 10, rng);
  const auto in = DecodeInput::from_packets(fx.packets);
  EXPECT_EQ(in.k(), 20U);
  EXPECT_EQ(in.m(), 3U);
  for (std::size_t l = 0; l < 3; ++l) {
    const gf2::LinearSystem sys(in.coefficients(), in.rhs(l));
    EXPECT_EQ(in.satisfied(l, fx.blocks[l]), 50U);
    const auto other = BitVector::from_u64(20, rng.next_u64());
    EXPECT_EQ(in.satisfied(l, other), gf2::count_satisfied(sys, other));
  }
}

TEST(MajorityTest, SingleSetWhenNoCorruption) {
  Rng rng(71);
  const auto fx = make_fixture(16, 1, 40, 0, rng);
  const auto o = majority_decode(DecodeInput::from_packets(fx.packets), 0, 0);
  ASSERT_TRUE(o.ok());
  EXPECT_EQ(*o.block, fx.blocks[0]);
  EXPECT_EQ(o.stats.sets_formed, 1U);
}

TEST(MajorityTest, TwoPoisonedSetsOutvoted) {
  Rng rng(72);
  for (int t = 0; t < 100; ++t) {
    auto fx = make_fixture(16, 2, 120, 0, rng);
    const auto sets = majority_sets(DecodeInput::from_packets(fx.packets).coefficients(), 5);
    ASSERT_EQ(sets.size(), 5U);
    for (const auto s : {1U, 3U}) {
      const auto victim = sets[s][rng.uniform_below(sets[s].size())];
      fx.packets[victim].payload.complement();
    }
    const auto in = DecodeInput::from_packets(fx.packets);
    for (std::size_t l = 0; l < 2; ++l) {
      const auto o = majority_decode(in, l, 2);
      ASSERT_TRUE(o.ok());
      EXPECT_EQ(*o.block, fx.blocks[l]);
      EXPECT_EQ(o.stats.multiplicity, 3U);
    }
  }
}

TEST(MajorityTest, NoMajorityCarriesHint) {
  Rng rng(73);
  auto fx = make_fixture(8, 1, 80, 0, rng);
  const auto sets = majority_sets(DecodeInput::from_packets(fx.packets).coefficients(), 5);
  ASSERT_EQ(sets.size(), 5U);
  for (const auto s : {0U, 1U, 2U}) fx.packets[sets[s][s]].payload.complement();
  const auto o = majority_decode(DecodeInput::from_packets(fx.packets), 0, 2);
  EXPECT_EQ(o.outcome, Outcome::kNoMajority);
  ASSERT_TRUE(o.hint.has_value());
  EXPECT_EQ(*o.hint, fx.blocks[0]);
  EXPECT_EQ(o.stats.multiplicity, 2U);
}

TEST(MajorityTest, InsufficientIndependence) {
  Rng rng(74);
  const auto fx = make_fixture(16, 1, 30, 0, rng);
  EXPECT_EQ(majority_decode(DecodeInput::from_packets(fx.packets), 0, 2).outcome,
            Outcome::kInsufficientIndependence);
}

TEST(ExhaustiveTest, CleanSystemUniqueSolution) {
  Rng rng(75);
  for (int t = 0; t < 20; ++t) {
    const auto fx = make_fixture(12, 1, 16, 0, rng);
    const auto in = DecodeInput::from_packets(fx.packets);
    const auto o = exhaustive_decode(in, 0, 16);
    if (gf2::rank(in.coefficients()) < 12) {
      EXPECT_EQ(o.outcome, Outcome::kAmbiguous);
      continue;
    }
    ASSERT_TRUE(o.ok());
    EXPECT_EQ(*o.block, fx.blocks[0]);
    EXPECT_EQ(o.stats.satisfied, 16U);
    EXPECT_EQ(o.stats.candidates, 4096U);
  }
}

TEST(ExhaustiveTest, MatchesBruteForce) {
  Rng rng(76);
  for (std::size_t k : {3U, 6U, 9U, 11U}) {
    for (int t = 0; t < 10; ++t) {
      const auto fx = make_fixture(k, 1, 2 * k + 3, 2, rng);
      const auto in = DecodeInput::from_packets(fx.packets);
      const gf2::LinearSystem sys(in.coefficients(), in.rhs(0));
      const std::size_t threshold = 2 * k + 1;
      std::vector<std::uint64_t> hits;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        if (gf2::count_satisfied(sys, BitVector::from_u64(k, s)) >= threshold) hits.push_back(s);
      }
      const auto o = exhaustive_decode(in, 0, threshold);
      if (hits.empty()) {
        EXPECT_EQ(o.outcome, Outcome::kNoCandidate);
      } else if (hits.size() == 1) {
        ASSERT_TRUE(o.ok());
        EXPECT_EQ(o.block->to_u64(), hits[0]);
      } else {
        EXPECT_EQ(o.outcome, Outcome::kAmbiguous);
      }
    }
  }
}

TEST(ExhaustiveTest, CeilingAndKernelEquivalence) {
  Rng rng(77);
  const auto big = make_fixture(25, 1, 40, 0, rng);
  EXPECT_THROW(exhaustive_decode(DecodeInput::from_packets(big.packets), 0, 30), UsageError);

  const auto fx = make_fixture(14, 1, 300, 20, rng);
  const auto in = DecodeInput::from_packets(fx.packets);
  kernels::force_isa(kernels::Isa::kScalar);
  const auto scalar = exhaustive_decode(in, 0, 280);
  kernels::reset_isa();
  const auto best = exhaustive_decode(in, 0, 280);
  ASSERT_TRUE(scalar.ok());
  EXPECT_EQ(scalar.block, best.block);
  EXPECT_EQ(*best.block, fx.blocks[0]);
}

TEST(ExhaustiveTest, UniformAdversaryTrueBlockReachesThreshold) {
  Rng rng(78);
  const auto plan = plan_uniform(12, 3, 4);
  for (int t = 0; t < 100; ++t) {
    const auto fx = make_fixture(12, 1, plan.required_packets, 3, rng);
    const auto in = DecodeInput::from_packets(fx.packets);
    EXPECT_GE(in.satisfied(0, fx.blocks[0]), plan.threshold);
    const auto o = exhaustive_decode(in, 0, plan.threshold);
    EXPECT_TRUE(o.ok() || o.outcome == Outcome::kAmbiguous);
    if (o.ok()) EXPECT_EQ(*o.block, fx.blocks[0]);
  }
}

TEST(RandomizedTest, CleanIterationsMatchFullRankOdds) {
  Rng rng(79);
  const std::size_t k = 16;
  const std::size_t eps = 2;
  double p_full = 1;
  for (std::size_t i = 0; i < k; ++i) p_full *= 1 - std::ldexp(1.0, static_cast<int>(i) - static_cast<int>(k + eps));
  double total = 0;
  constexpr int kTrials = 2000;
  for (int t = 0; t < kTrials; ++t) {
    const auto fx = make_fixture(k, 1, 40, 0, rng);
    const auto o = randomized_decode(DecodeInput::from_packets(fx.packets), 0, 0, eps, rng);
    ASSERT_TRUE(o.ok());
    EXPECT_EQ(*o.block, fx.blocks[0]);
    total += static_cast<double>(o.stats.iterations);
  }
  EXPECT_NEAR(total / kTrials, 1 / p_full, 0.1 / p_full);
}

TEST(RandomizedTest, AgreesWithExhaustive) {
  Rng rng(80);
  for (int t = 0; t < 50; ++t) {
    const auto fx = make_fixture(8, 1, 60, 2, rng);
    const auto in = DecodeInput::from_packets(fx.packets);
    const auto e = exhaustive_decode(in, 0, 58);
    const auto r = randomized_decode(in, 0, 2, 4, rng);
    ASSERT_TRUE(e.ok());
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(*e.block, *r.block);
  }
}

TEST(RandomizedTest, FixedThresholdAcceptsWrongBlocksAtLargeN) {
  Rng rng(81);
  int wrong_fixed = 0;
  int wrong_all_but_f = 0;
  for (int t = 0; t < 100; ++t) {
    const auto fx = make_fixture(16, 1, 200, 4, rng);
    const auto in = DecodeInput::from_packets(fx.packets);
    const auto fixed = randomized_decode(in, 0, 4, 4, rng, {Acceptance::kFixedThreshold, 0});
    const auto strict = randomized_decode(in, 0, 4, 4, rng);
    wrong_fixed += fixed.ok() && *fixed.block != fx.blocks[0];
    wrong_all_but_f += strict.ok() && *strict.block != fx.blocks[0];
    EXPECT_TRUE(strict.ok());
  }
  EXPECT_GT(wrong_fixed, 0);
  EXPECT_EQ(wrong_all_but_f, 0);
}

TEST(RandomizedTest, IterationCap) {
  Rng rng(82);
  const auto fx = make_fixture(16, 1, 40, 6, rng);
  const auto o = randomized_decode(DecodeInput::from_packets(fx.packets), 0, 0, 4, rng, {Acceptance::kAllButF, 10});
  EXPECT_EQ(o.outcome, Outcome::kIterationBudget);
  EXPECT_EQ(o.stats.iterations, 10U);
  const auto small = make_fixture(16, 1, 18, 0, rng);
  EXPECT_THROW(randomized_decode(DecodeInput::from_packets(small.packets), 0, 0, 4, rng), UsageError);
}

TEST(DecodeAllTest, SingleBlockMatchesPerBlock) {
  Rng rng(83);
  const auto fx = make_fixture(12, 1, 22, 3, rng);
  const auto in = DecodeInput::from_packets(fx.packets);
  const auto plan = plan_uniform(12, 3, 4);
  const auto all = decode_all_blocks(in, plan, Algorithm::kExhaustive, rng);
  const auto one = exhaustive_decode(in, 0, plan.threshold);
  ASSERT_EQ(all.blocks.size(), 1U);
  EXPECT_EQ(all.blocks[0].outcome, one.outcome);
  EXPECT_EQ(all.blocks[0].block, one.block);
}

TEST(DecodeAllTest, CleanEightBlocks) {
  Rng rng(84);
  const auto fx = make_fixture(20, 8, 200, 0, rng);
  const auto in = DecodeInput::from_packets(fx.packets);
  const auto plan = plan_uniform(20, 2, 4);
  for (const auto algo : {Algorithm::kMajority, Algorithm::kExhaustive, Algorithm::kRandomized}) {
    const auto out = decode_all_blocks(in, plan, algo, rng);
    ASSERT_TRUE(out.ok()) << algorithm_name(algo);
    EXPECT_EQ(out.values(), fx.blocks);
  }
}

TEST(DecodeAllTest, CorruptedRunMatchesExhaustivePerBlock) {
  Rng rng(85);
  const auto plan = plan_uniform(10, 3, 4);
  for (int t = 0; t < 20; ++t) {
    auto fx = make_fixture(10, 6, 80, 0, rng);
    // Flip a random nonempty subset of payload bits in 3 packets.
    for (int v = 0; v < 3; ++v) {
      auto& p = fx.packets[rng.uniform_below(fx.packets.size())].payload;
      BitVector mask(6);
      while (mask.none()) mask = BitVector::from_u64(6, rng.next_u64());
      p ^= mask;
    }
    const auto in = DecodeInput::from_packets(fx.packets);
    const auto all = decode_all_blocks(in, plan, Algorithm::kRandomized, rng);
    ASSERT_TRUE(all.ok());
    for (std::size_t l = 0; l < 6; ++l) {
      const auto e = exhaustive_decode(in, l, plan.acceptance_threshold(80, Acceptance::kAllButF));
      ASSERT_TRUE(e.ok());
      EXPECT_EQ(*all.blocks[l].block, *e.block);
      EXPECT_EQ(*e.block, fx.blocks[l]);
    }
  }
}

TEST(AdaptiveTest, EscalatesUntilAccepted) {
  Rng data(86);
  const auto blocks = gf2::random_matrix(2, 16, gf2::Ensemble::uniform(), data).row_data();
  std::size_t sent = 0;
  auto source = [&] {
    auto p = coding::generate_packet(blocks, coding::CodingDistribution::uniform(), coding::HeaderForm::kDense, data);
    if (sent++ % 25 == 7) p.payload.complement();
    return p;
  };
  Rng rng(87);
  const auto out = adaptive_decode(source, 16, 4, rng, 1000);
  ASSERT_TRUE(out.result.ok());
  EXPECT_EQ(out.result.values(), blocks);
  EXPECT_EQ(out.assumed_f, 8U);
  EXPECT_EQ(out.rounds, 4U);

  std::size_t calls = 0;
  auto never = [&] { ++calls; return source(); };
  EXPECT_FALSE(adaptive_decode(never, 16, 4, rng, 10).result.ok());
  EXPECT_EQ(calls, 0U);
}

}  // namespace
}  // namespace crfc::decoders
