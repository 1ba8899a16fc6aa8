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
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "crfc/coding/packet.hpp"
#include "crfc/decoders/plan.hpp"
#include "crfc/gf2/bit_matrix.hpp"
#include "crfc/random.hpp"

namespace crfc::decoders {

using gf2::BitMatrix;
using gf2::BitVector;

// Collected equations r_i . b_l = y_il, kept both row-wise and column-wise.
class DecodeInput {
 public:
  // coefficients is n x k, payloads is n x m.
  DecodeInput(BitMatrix coefficients, BitMatrix payloads);

  static DecodeInput from_packets(std::span<const coding::Packet> packets);

  std::size_t k() const noexcept { return coefficients_.cols(); }
  std::size_t m() const noexcept { return payloads_.cols(); }
  std::size_t packets() const noexcept { return coefficients_.rows(); }

  const BitMatrix& coefficients() const noexcept { return coefficients_; }
  const BitMatrix& payloads() const noexcept { return payloads_; }
  // Column j of the coefficients, one bit per packet.
  const BitVector& column(std::size_t j) const { return columns_[j]; }
  // Payload bit of block l across packets.
  const BitVector& rhs(std::size_t block) const { return rhs_[block]; }

  // Number of collected equations for `block` that `candidate` satisfies.
  std::size_t satisfied(std::size_t block, const BitVector& candidate) const;

 private:
  BitMatrix coefficients_;
  BitMatrix payloads_;
  std::vector<BitVector> columns_;
  std::vector<BitVector> rhs_;
};

enum class Outcome : std::uint8_t {
  kRecovered,
  kNoMajority,
  kInsufficientIndependence,
  kAmbiguous,
  kNoCandidate,
  kIterationBudget,
};

std::string_view outcome_name(Outcome outcome);

struct DecodeStats {
  std::size_t iterations = 0;      // randomized: subsets drawn
  std::size_t satisfied = 0;       // equations the returned (or hinted) block satisfies
  std::size_t sets_formed = 0;     // majority: full-rank disjoint sets
  std::size_t eliminations = 0;    // Gaussian eliminations run
  std::size_t candidates = 0;      // exhaustive: candidates evaluated
  std::size_t accepted = 0;        // exhaustive: candidates reaching the threshold
  std::size_t multiplicity = 0;    // majority: votes for the returned value
};

struct DecodeOutcome {
  Outcome outcome = Outcome::kNoCandidate;
  std::optional<BitVector> block;  // set iff recovered
  std::optional<BitVector> hint;   // best rejected value, when there is one
  DecodeStats stats;

  bool ok() const noexcept { return outcome == Outcome::kRecovered; }
};

struct MultiDecodeOutcome {
  std::vector<DecodeOutcome> blocks;

  bool ok() const noexcept;
  // The recovered blocks; throws std::logic_error unless ok().
  std::vector<BitVector> values() const;
  // First failing outcome, or kRecovered.
  Outcome first_failure() const noexcept;
};

// Greedy disjoint sets of k independent packets, in arrival order.
std::vector<std::vector<std::size_t>> majority_sets(const BitMatrix& coefficients, std::size_t wanted);

DecodeOutcome majority_decode(const DecodeInput& input, std::size_t block, std::size_t f);

inline constexpr std::size_t kDefaultExhaustiveCeiling = 24;

// Enumerate all 2^k candidates; recovered only when exactly one reaches
// `threshold`. Throws UsageError if k exceeds `ceiling`.
DecodeOutcome exhaustive_decode(const DecodeInput& input, std::size_t block, std::size_t threshold,
                                std::size_t ceiling = kDefaultExhaustiveCeiling);

struct RandomizedOptions {
  Acceptance acceptance = Acceptance::kAllButF;
  // 0 selects 64 times the predicted iteration count.
  std::size_t iteration_cap = 0;
};

DecodeOutcome randomized_decode(const DecodeInput& input, std::size_t block, std::size_t f, std::size_t epsilon,
                                Rng& rng, const RandomizedOptions& options = {});

enum class Algorithm : std::uint8_t { kMajority, kExhaustive, kRandomized };

std::string_view algorithm_name(Algorithm algorithm);

struct DecodeAllOptions {
  Acceptance acceptance = Acceptance::kAllButF;
  std::size_t exhaustive_ceiling = kDefaultExhaustiveCeiling;
  std::size_t iteration_cap = 0;
};

// Decode every block, sharing the coefficient-side work between them.
MultiDecodeOutcome decode_all_blocks(const DecodeInput& input, const DecodePlan& plan, Algorithm algorithm, Rng& rng,
                                     const DecodeAllOptions& options = {});

// Escalation for an unknown corruption count: start from f = 1, collect
// k + 2f + epsilon packets, and double f until every block is accepted under
// all-but-f acceptance. This is a fallback without a proven guarantee.
struct AdaptiveOutcome {
  MultiDecodeOutcome result;
  std::size_t assumed_f = 0;
  std::size_t packets_used = 0;
  std::size_t rounds = 0;
};

AdaptiveOutcome adaptive_decode(const std::function<coding::Packet()>& next_packet, std::size_t k,
                                std::size_t epsilon, Rng& rng, std::size_t max_packets);

}  // namespace crfc::decoders
