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

#include "crfc/decoders/decoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "crfc/errors.hpp"
#include "crfc/gf2/kernels.hpp"
#include "crfc/gf2/linear_system.hpp"

namespace crfc::decoders {

using gf2::AugmentedEliminator;

DecodeInput::DecodeInput(BitMatrix coefficients, BitMatrix payloads)
    : coefficients_(std::move(coefficients)), payloads_(std::move(payloads)) {
  if (coefficients_.rows() != payloads_.rows()) throw UsageError("coefficient and payload row counts differ");
  if (coefficients_.cols() == 0) throw UsageError("k must be positive");
  const auto t = coefficients_.transpose();
  columns_ = t.row_data();
  rhs_ = payloads_.transpose().row_data();
  if (coefficients_.rows() == 0) {
    columns_.assign(coefficients_.cols(), BitVector(0));
    rhs_.assign(payloads_.cols(), BitVector(0));
  }
}

DecodeInput DecodeInput::from_packets(std::span<const coding::Packet> packets) {
  if (packets.empty()) throw UsageError("no packets to decode");
  const auto k = packets.front().k;
  const auto m = packets.front().m();
  std::vector<BitVector> coeffs;
  std::vector<BitVector> payloads;
  for (const auto& p : packets) {
    if (p.k != k || p.m() != m) throw UsageError("packets disagree on k or m");
    coeffs.push_back(coding::expand_header(p));
    payloads.push_back(p.payload);
  }
  return DecodeInput(BitMatrix::from_rows(std::move(coeffs), k), BitMatrix::from_rows(std::move(payloads), m));
}

std::size_t DecodeInput::satisfied(std::size_t block, const BitVector& candidate) const {
  if (candidate.size() != k()) throw UsageError("candidate length differs from k");
  BitVector residual = rhs_[block];
  for (const auto j : candidate.ones()) residual ^= columns_[j];
  return packets() - residual.popcount();
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kRecovered: return "recovered";
    case Outcome::kNoMajority: return "no-majority";
    case Outcome::kInsufficientIndependence: return "insufficient-independence";
    case Outcome::kAmbiguous: return "ambiguous";
    case Outcome::kNoCandidate: return "no-candidate";
    case Outcome::kIterationBudget: return "iteration-budget";
  }
  return "?";
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kMajority: return "majority";
    case Algorithm::kExhaustive: return "exhaustive";
    case Algorithm::kRandomized: return "randomized";
  }
  return "?";
}

bool MultiDecodeOutcome::ok() const noexcept {
  return !blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [](const DecodeOutcome& o) { return o.ok(); });
}

std::vector<BitVector> MultiDecodeOutcome::values() const {
  if (!ok()) throw std::logic_error("decode did not recover every block");
  std::vector<BitVector> out;
  for (const auto& b : blocks) out.push_back(*b.block);
  return out;
}

Outcome MultiDecodeOutcome::first_failure() const noexcept {
  if (blocks.empty()) return Outcome::kNoCandidate;
  for (const auto& b : blocks) {
    if (!b.ok()) return b.outcome;
  }
  return Outcome::kRecovered;
}

namespace {

std::vector<std::size_t> all_blocks(const DecodeInput& input) {
  std::vector<std::size_t> out(input.m());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

void check_block(const DecodeInput& input, std::size_t block) {
  if (block >= input.m()) throw UsageError("block index out of range");
}

// ---- majority ----

std::vector<DecodeOutcome> majority_core(const DecodeInput& input, std::span<const std::size_t> blocks,
                                         std::size_t f) {
  const auto wanted = 2 * f + 1;
  const auto sets = majority_sets(input.coefficients(), wanted);
  std::vector<DecodeOutcome> out(blocks.size());
  for (auto& o : out) o.stats.sets_formed = sets.size();
  if (sets.size() < wanted) {
    for (auto& o : out) o.outcome = Outcome::kInsufficientIndependence;
    return out;
  }

  std::vector<std::vector<std::pair<BitVector, std::size_t>>> votes(blocks.size());
  for (const auto& set : sets) {
    AugmentedEliminator elim(input.k(), blocks.size());
    for (const auto i : set) {
      BitVector rhs(blocks.size());
      for (std::size_t j = 0; j < blocks.size(); ++j) rhs.set(j, input.payloads().get(i, blocks[j]));
      elim.add_row(input.coefficients().row(i), rhs);
    }
    elim.reduce();
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      ++out[j].stats.eliminations;
      const auto s = std::get<BitVector>(elim.solution(j));
      auto& v = votes[j];
      auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) { return e.first == s; });
      if (it == v.end()) {
        v.emplace_back(s, 1);
      } else {
        ++it->second;
      }
    }
  }

  for (std::size_t j = 0; j < blocks.size(); ++j) {
    // Plurality; ties go to the value seen first.
    const auto best = std::max_element(votes[j].begin(), votes[j].end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    auto& o = out[j];
    o.stats.multiplicity = best->second;
    o.stats.satisfied = input.satisfied(blocks[j], best->first);
    if (best->second >= f + 1) {
      o.outcome = Outcome::kRecovered;
      o.block = best->first;
    } else {
      o.outcome = Outcome::kNoMajority;
      o.hint = best->first;
    }
  }
  return out;
}

// ---- exhaustive ----

class CandidateScanner {
 public:
  CandidateScanner(const DecodeInput& input, std::size_t ceiling) : input_(input) {
    const auto k = input.k();
    if (k > ceiling || k > 63) {
      throw UsageError("exhaustive decoding is limited to k <= " + std::to_string(std::min<std::size_t>(ceiling, 63)) +
                       " (k=" + std::to_string(k) + "); use the randomized decoder");
    }
    low_ = std::min<std::size_t>(k, 8);
    entries_ = std::size_t{1} << low_;
    nwords_ = BitVector::words_for(input.packets());
    // Entry t is the xor of the low columns selected by t, stored word-major.
    table_.assign(nwords_ * entries_, 0);
    std::vector<BitVector> entry(entries_, BitVector(input.packets()));
    for (std::size_t t = 1; t < entries_; ++t) {
      entry[t] = entry[t & (t - 1)];
      entry[t] ^= input.column(static_cast<std::size_t>(std::countr_zero(t)));
      for (std::size_t w = 0; w < nwords_; ++w) table_[w * entries_ + t] = entry[t].words()[w];
    }
  }

  DecodeOutcome scan(std::size_t block, std::size_t threshold) const {
    const auto& kern = gf2::kernels::active();
    const auto n = input_.packets();
    const auto high = input_.k() - low_;
    BitVector base = input_.rhs(block);
    std::vector<std::uint32_t> mismatch(entries_);

    DecodeOutcome o;
    std::vector<std::pair<std::uint64_t, std::size_t>> hits;
    std::uint64_t gray = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << high); ++i) {
      if (i > 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        gray ^= std::uint64_t{1} << bit;
        base ^= input_.column(low_ + bit);
      }
      kern.xor_popcount_batch(base.words().data(), table_.data(), nwords_, entries_, mismatch.data());
      o.stats.candidates += entries_;
      for (std::size_t t = 0; t < entries_; ++t) {
        const auto sat = n - mismatch[t];
        if (sat >= threshold) hits.emplace_back((gray << low_) | t, sat);
      }
      if (hits.size() >= 2) break;
    }

    o.stats.accepted = hits.size();
    if (hits.size() == 1) {
      o.outcome = Outcome::kRecovered;
      o.block = BitVector::from_u64(input_.k(), hits[0].first);
      o.stats.satisfied = hits[0].second;
    } else if (hits.size() >= 2) {
      o.outcome = Outcome::kAmbiguous;
      o.hint = BitVector::from_u64(input_.k(), hits[0].first);
      o.stats.satisfied = hits[0].second;
    } else {
      o.outcome = Outcome::kNoCandidate;
    }
    return o;
  }

 private:
  const DecodeInput& input_;
  std::size_t low_ = 0;
  std::size_t entries_ = 0;
  std::size_t nwords_ = 0;
  std::vector<gf2::kernels::Word> table_;
};

// ---- randomized ----

std::size_t default_cap(const DecodeInput& input, std::size_t f, std::size_t epsilon) {
  constexpr double kMaxCap = 1 << 22;
  const auto k = input.k();
  const auto floor_n = k + f + epsilon;
  const std::size_t g = input.packets() > floor_n ? input.packets() - floor_n : 0;
  const double expected = predicted_iterations(k, f, epsilon, g);
  const double cap = std::min(kMaxCap, std::ceil(64.0 * expected));
  return std::max<std::size_t>(64, std::isfinite(cap) ? static_cast<std::size_t>(cap) : 1 << 22);
}

std::vector<DecodeOutcome> randomized_core(const DecodeInput& input, std::span<const std::size_t> blocks,
                                           std::size_t threshold, std::size_t epsilon, std::size_t cap, Rng& rng) {
  const auto k = input.k();
  const auto n = input.packets();
  const auto subset = k + epsilon;
  if (n < subset) {
    throw UsageError("randomized decoding needs at least k + epsilon = " + std::to_string(subset) + " packets, got " +
                     std::to_string(n));
  }

  std::vector<DecodeOutcome> out(blocks.size());
  std::vector<std::size_t> pending(blocks.size());
  std::iota(pending.begin(), pending.end(), 0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  for (std::size_t it = 1; it <= cap && !pending.empty(); ++it) {
    partial_shuffle(std::span<std::size_t>(order), subset, rng);
    AugmentedEliminator elim(k, pending.size());
    for (std::size_t r = 0; r < subset; ++r) {
      const auto i = order[r];
      BitVector rhs(pending.size());
      for (std::size_t j = 0; j < pending.size(); ++j) rhs.set(j, input.payloads().get(i, blocks[pending[j]]));
      elim.add_row(input.coefficients().row(i), rhs);
    }
    const auto rank = elim.reduce();

    std::vector<std::size_t> still;
    for (std::size_t j = 0; j < pending.size(); ++j) {
      auto& o = out[pending[j]];
      o.stats.iterations = it;
      ++o.stats.eliminations;
      if (rank < k) {
        still.push_back(pending[j]);
        continue;
      }
      const auto result = elim.solution(j);
      const auto* s = std::get_if<BitVector>(&result);
      if (s == nullptr) {
        still.push_back(pending[j]);
        continue;
      }
      const auto sat = input.satisfied(blocks[pending[j]], *s);
      if (sat >= threshold) {
        o.outcome = Outcome::kRecovered;
        o.block = *s;
        o.hint.reset();
        o.stats.satisfied = sat;
      } else {
        if (!o.hint || sat > o.stats.satisfied) {
          o.hint = *s;
          o.stats.satisfied = sat;
        }
        still.push_back(pending[j]);
      }
    }
    pending = std::move(still);
  }
  for (const auto j : pending) out[j].outcome = Outcome::kIterationBudget;
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> majority_sets(const BitMatrix& coefficients, std::size_t wanted) {
  std::vector<std::vector<std::size_t>> sets;
  if (wanted == 0) return sets;
  gf2::IncrementalBasis basis(coefficients.cols());
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < coefficients.rows() && sets.size() < wanted; ++i) {
    // A packet dependent on the open set is dropped, not carried forward.
    if (!basis.insert(coefficients.row(i))) continue;
    current.push_back(i);
    if (basis.full()) {
      sets.push_back(std::move(current));
      current.clear();
      basis = gf2::IncrementalBasis(coefficients.cols());
    }
  }
  return sets;
}

DecodeOutcome majority_decode(const DecodeInput& input, std::size_t block, std::size_t f) {
  check_block(input, block);
  const std::size_t blocks[] = {block};
  return majority_core(input, blocks, f).front();
}

DecodeOutcome exhaustive_decode(const DecodeInput& input, std::size_t block, std::size_t threshold,
                                std::size_t ceiling) {
  check_block(input, block);
  return CandidateScanner(input, ceiling).scan(block, threshold);
}

DecodeOutcome randomized_decode(const DecodeInput& input, std::size_t block, std::size_t f, std::size_t epsilon,
                                Rng& rng, const RandomizedOptions& options) {
  check_block(input, block);
  const auto k = input.k();
  const auto n = input.packets();
  const auto threshold =
      options.acceptance == Acceptance::kFixedThreshold ? k + f + epsilon : (n > f ? n - f : 0);
  const auto cap = options.iteration_cap ? options.iteration_cap : default_cap(input, f, epsilon);
  const std::size_t blocks[] = {block};
  return randomized_core(input, blocks, threshold, epsilon, cap, rng).front();
}

MultiDecodeOutcome decode_all_blocks(const DecodeInput& input, const DecodePlan& plan, Algorithm algorithm, Rng& rng,
                                     const DecodeAllOptions& options) {
  if (plan.k != input.k()) throw UsageError("plan k differs from the packets' k");
  const auto blocks = all_blocks(input);
  const auto threshold = plan.acceptance_threshold(input.packets(), options.acceptance);
  MultiDecodeOutcome out;
  switch (algorithm) {
    case Algorithm::kMajority:
      out.blocks = majority_core(input, blocks, plan.corruptions);
      break;
    case Algorithm::kExhaustive: {
      const CandidateScanner scanner(input, options.exhaustive_ceiling);
      for (const auto l : blocks) out.blocks.push_back(scanner.scan(l, threshold));
      break;
    }
    case Algorithm::kRandomized: {
      const auto cap =
          options.iteration_cap ? options.iteration_cap : default_cap(input, plan.corruptions, plan.epsilon);
      out.blocks = randomized_core(input, blocks, threshold, plan.epsilon, cap, rng);
      break;
    }
  }
  return out;
}

AdaptiveOutcome adaptive_decode(const std::function<coding::Packet()>& next_packet, std::size_t k,
                                std::size_t epsilon, Rng& rng, std::size_t max_packets) {
  if (k == 0 || epsilon == 0) throw UsageError("adaptive decoding needs k > 0 and epsilon > 0");
  AdaptiveOutcome out;
  std::vector<coding::Packet> collected;
  for (std::size_t f = 1;; f *= 2) {
    const auto g = choose_g(k, f, epsilon);
    const auto need = k + 2 * f + epsilon + g;
    if (need > max_packets) break;
    while (collected.size() < need) collected.push_back(next_packet());

    DecodePlan plan;
    plan.k = k;
    plan.model = UniformModel{f};
    plan.epsilon = epsilon;
    plan.required_packets = need;
    plan.threshold = k + f + epsilon;
    plan.corruptions = f;

    ++out.rounds;
    out.assumed_f = f;
    out.packets_used = collected.size();
    out.result = decode_all_blocks(DecodeInput::from_packets(collected), plan, Algorithm::kRandomized, rng);
    if (out.result.ok()) break;
  }
  return out;
}

}  // namespace crfc::decoders
