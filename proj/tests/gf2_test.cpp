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
#include <set>

#include "crfc/errors.hpp"
#include "crfc/gf2/bit_matrix.hpp"
#include "crfc/gf2/ensembles.hpp"
#include "crfc/gf2/linear_system.hpp"

namespace crfc::gf2 {
namespace {

// Row-space size by enumerating all 2^rows combinations; rank = log2(size).
std::size_t brute_force_rank(const BitMatrix& m) {
  std::set<std::string> span;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
    BitVector acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if ((mask >> r) & 1U) acc ^= m.row(r);
    }
    span.insert(acc.to_string());
  }
  return static_cast<std::size_t>(std::countr_zero(span.size()));
}

bool naive_parity(const BitVector& a, const BitVector& b) {
  bool p = false;
  for (std::size_t i = 0; i < a.size(); ++i) p ^= a.get(i) && b.get(i);
  return p;
}

TEST(BitVectorTest, PaddingStaysCanonical) {
  BitVector v(70);
  v.complement();
  EXPECT_EQ(v.popcount(), 70U);
  EXPECT_EQ(v.words()[1] >> 6, 0U);
  auto u = BitVector::from_u64(5, ~std::uint64_t{0});
  EXPECT_EQ(u.to_u64(), 0b11111U);
}

TEST(BitVectorTest, XorWithSelfIsZero) {
  Rng rng(7);
  for (std::size_t len : {1U, 63U, 64U, 65U, 300U}) {
    auto m = random_matrix(1, len, Ensemble::uniform(), rng);
    auto v = m.row(0);
    v ^= m.row(0);
    EXPECT_TRUE(v.none());
    EXPECT_EQ(v.size(), len);
  }
}

TEST(BitVectorTest, StringAndIndexForms) {
  const auto v = BitVector::from_string("1001");
  EXPECT_TRUE(v.get(0));
  EXPECT_TRUE(v.get(3));
  EXPECT_EQ(v.ones(), (std::vector<std::uint32_t>{0, 3}));
  EXPECT_EQ(v.to_string(), "1001");
  EXPECT_THROW(BitVector::from_string("10x"), UsageError);
  EXPECT_THROW(BitVector(3) ^= BitVector(4), UsageError);
}

TEST(RankTest, SmallExamples) {
  EXPECT_EQ(rank(BitMatrix::identity(3)), 3U);
  EXPECT_EQ(rank(BitMatrix(4, 5)), 0U);
  const BitMatrix m{"110", "011", "101"};
  EXPECT_EQ(brute_force_rank(m), 2U);
  EXPECT_EQ(rank(m), 2U);
  // rank() must not modify its argument.
  EXPECT_EQ(m, (BitMatrix{"110", "011", "101"}));
}

TEST(RankTest, MatchesBruteForceAndTranspose) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = 1 + rng.uniform_below(8);
    const auto cols = 1 + rng.uniform_below(8);
    const auto ensemble = trial % 2 == 0 ? Ensemble::uniform() : Ensemble::bernoulli(0.25);
    const auto m = random_matrix(rows, cols, ensemble, rng);
    const auto r = rank(m);
    EXPECT_EQ(r, brute_force_rank(m));
    EXPECT_EQ(r, rank(m.transpose()));
    EXPECT_LE(r, std::min(rows, cols));
  }
}

TEST(RankTest, RowOperationsPreserveRank) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(10, 90, Ensemble::bernoulli(0.05), rng);
    const auto before = rank(m);
    const auto i = rng.uniform_below(10);
    auto j = rng.uniform_below(10);
    if (j == i) j = (j + 1) % 10;
    m.row(i) ^= m.row(j);
    EXPECT_EQ(rank(m), before);
  }
}

TEST(SolveTest, Examples) {
  const LinearSystem identity(BitMatrix::identity(3), BitVector::from_string("101"));
  EXPECT_EQ(std::get<BitVector>(solve_unique(identity)), BitVector::from_string("101"));

  const LinearSystem contradictory(BitMatrix{"10", "10"}, BitVector::from_string("10"));
  EXPECT_TRUE(std::holds_alternative<NoSolution>(solve_unique(contradictory)));

  // rows {11, 01} with rhs {1, 1}: of the four candidates only 01 works.
  const LinearSystem sys(BitMatrix{"11", "01"}, BitVector::from_string("11"));
  std::vector<BitVector> brute;
  for (std::uint64_t x = 0; x < 4; ++x) {
    const auto cand = BitVector::from_u64(2, x);
    if (count_satisfied(sys, cand) == 2) brute.push_back(cand);
  }
  ASSERT_EQ(brute.size(), 1U);
  EXPECT_EQ(brute[0].to_string(), "01");
  EXPECT_EQ(std::get<BitVector>(solve_unique(sys)), brute[0]);

  const LinearSystem under(BitMatrix{"110", "011"}, BitVector::from_string("10"));
  EXPECT_EQ(std::get<Underdetermined>(solve_unique(under)).rank, 2U);
}

TEST(SolveTest, AgreesWithEnumeration) {
  Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const auto cols = 1 + rng.uniform_below(6);
    const auto rows = 1 + rng.uniform_below(9);
    const auto a = random_matrix(rows, cols, Ensemble::uniform(), rng);
    const auto b = random_matrix(1, rows, Ensemble::uniform(), rng).row(0);
    const LinearSystem sys(a, b);
    std::vector<BitVector> solutions;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
      const auto cand = BitVector::from_u64(cols, x);
      if (count_satisfied(sys, cand) == rows) solutions.push_back(cand);
    }
    const auto result = solve_unique(sys);
    if (solutions.empty()) {
      EXPECT_TRUE(std::holds_alternative<NoSolution>(result));
    } else if (solutions.size() == 1) {
      ASSERT_TRUE(std::holds_alternative<BitVector>(result));
      EXPECT_EQ(std::get<BitVector>(result), solutions[0]);
    } else {
      EXPECT_TRUE(std::holds_alternative<Underdetermined>(result));
    }
  }
}

TEST(SolveTest, MultiRhsMatchesSingle) {
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(40, 32, Ensemble::uniform(), rng);
    const auto x = random_matrix(5, 32, Ensemble::uniform(), rng);
    BitMatrix rhs(40, 5);
    for (std::size_t r = 0; r < 40; ++r) {
      for (std::size_t j = 0; j < 5; ++j) rhs.set(r, j, dot(a.row(r), x.row(j)));
    }
    const auto multi = solve_unique_multi(a, rhs);
    for (std::size_t j = 0; j < 5; ++j) {
      const auto single = solve_unique(LinearSystem(a, rhs.column(j)));
      EXPECT_EQ(multi[j], single);
      if (const auto* sol = std::get_if<BitVector>(&multi[j])) EXPECT_EQ(*sol, x.row(j));
    }
  }
}

TEST(CountSatisfiedTest, Examples) {
  Rng rng(15);
  const auto a = random_matrix(10, 6, Ensemble::uniform(), rng);
  const auto x = random_matrix(1, 6, Ensemble::uniform(), rng).row(0);
  BitVector b(10);
  for (std::size_t r = 0; r < 10; ++r) b.set(r, dot(a.row(r), x));
  EXPECT_EQ(count_satisfied(LinearSystem(a, b), x), 10U);

  const LinearSystem zero(BitMatrix(7, 4), BitVector(7));
  EXPECT_EQ(count_satisfied(zero, BitVector::from_string("1011")), 7U);
  EXPECT_THROW(count_satisfied(zero, BitVector(5)), UsageError);
}

TEST(CountSatisfiedTest, MatchesPerRowOracle) {
  Rng rng(16);
  int checked = 0;
  while (checked < 100) {
    const auto a = random_matrix(5, 3, Ensemble::uniform(), rng);
    const auto b = random_matrix(1, 5, Ensemble::uniform(), rng).row(0);
    // Solve a consistent 3-row subset, then score against all 5 rows.
    BitMatrix sub(0, 3);
    BitVector sub_rhs(3);
    for (std::size_t r = 0; r < 3; ++r) {
      sub.append_row(a.row(r));
      sub_rhs.set(r, b.get(r));
    }
    const LinearSystem subsystem(sub, sub_rhs);
    const auto result = solve_unique(subsystem);
    const auto* x = std::get_if<BitVector>(&result);
    if (x == nullptr) continue;
    ++checked;
    EXPECT_EQ(count_satisfied(subsystem, *x), 3U);
    std::size_t oracle = 0;
    for (std::size_t r = 0; r < 5; ++r) oracle += naive_parity(a.row(r), *x) == b.get(r) ? 1 : 0;
    EXPECT_EQ(count_satisfied(LinearSystem(a, b), *x), oracle);
  }
}

TEST(IncrementalBasisTest, RankMatchesElimination) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(20, 16, Ensemble::bernoulli(0.2), rng);
    IncrementalBasis basis(16);
    for (const auto& row : m.row_data()) basis.insert(row);
    EXPECT_EQ(basis.rank(), rank(m));
  }
}

TEST(RandomMatrixTest, BernoulliHalfMean) {
  Rng rng(18);
  const auto m = random_matrix(1000, 100, Ensemble::bernoulli(0.5), rng);
  std::size_t ones = 0;
  for (const auto& r : m.row_data()) ones += r.popcount();
  EXPECT_NEAR(static_cast<double>(ones) / 1e5, 0.5, 0.01);
}

TEST(RandomMatrixTest, DeterministicAndValidated) {
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(random_matrix(30, 70, Ensemble::uniform(), a), random_matrix(30, 70, Ensemble::uniform(), b));
  EXPECT_EQ(random_matrix(5, 9, Ensemble::bernoulli(0.3), a), random_matrix(5, 9, Ensemble::bernoulli(0.3), b));
  const auto one = random_matrix(1, 1, Ensemble::uniform(), a);
  EXPECT_LE(one.row(0).to_u64(), 1U);
  EXPECT_THROW(random_matrix(1, 1, Ensemble::bernoulli(1.0), a), UsageError);
  EXPECT_THROW(random_matrix(1, 1, Ensemble::bernoulli(0.0), a), UsageError);
}

TEST(RankFailureLimitTest, Values) {
  // Partial product to j = 64, computed independently.
  double product = 1.0;
  for (int j = 1; j <= 64; ++j) product *= 1.0 - std::ldexp(1.0, -j);
  EXPECT_NEAR(gf2::rank_failure_limit(0), 1.0 - product, 1e-12);
  EXPECT_NEAR(gf2::rank_failure_limit(0), 0.711212, 1e-6);
  EXPECT_LT(gf2::rank_failure_limit(40), std::ldexp(1.0, -40) + 1e-12);
  // The gap to 2^-d is itself ~2^-2d, so strictness is only visible while it
  // stays above double resolution.
  for (std::size_t d = 1; d <= 52; ++d) EXPECT_LT(gf2::rank_failure_limit(d), std::ldexp(1.0, -static_cast<int>(d)));
  for (std::size_t d = 53; d < 70; ++d) EXPECT_LE(gf2::rank_failure_limit(d), std::ldexp(1.0, -static_cast<int>(d)));
}

TEST(RankBoundTest, UniformEnsembleSmallMonteCarlo) {
  // Lighter version of the full acceptance run: k = 32, eps = 4.
  Rng rng(19);
  constexpr int kTrials = 20000;
  int failures = 0;
  for (int t = 0; t < kTrials; ++t) failures += rank(random_matrix(36, 32, Ensemble::uniform(), rng)) < 32 ? 1 : 0;
  const double p = static_cast<double>(failures) / kTrials;
  const double bound = 1.0 / 16;
  EXPECT_LE(p, bound + 3 * std::sqrt(bound * (1 - bound) / kTrials));
}

}  // namespace
}  // namespace crfc::gf2
