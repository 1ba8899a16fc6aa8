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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crfc/coding/packet.hpp"
#include "crfc/lt/lt_codec.hpp"
#include "crfc/random.hpp"

namespace crfc::adversary {

// Corruption rate c = numerator / denominator with 0 < c <= 1/3.
class CBound {
 public:
  CBound(std::uint64_t numerator, std::uint64_t denominator);

  // Accepts "p/q" or a decimal such as "0.2".
  static CBound parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // floor(c * max(i, 4)): corruptions allowed among the first i packets.
  std::size_t budget(std::size_t i) const noexcept;

  std::string to_string() const;

  friend bool operator==(const CBound&, const CBound&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

enum class Knowledge : std::uint8_t { kOnline, kOffline };
enum class Selection : std::uint8_t { kUniform, kSelective };

// Prefix: every prefix of the arrival order obeys the budget. FinalSet: only
// the complete delivered stream does.
enum class BoundReading : std::uint8_t { kPrefix, kFinalSet };

enum class FlipMask : std::uint8_t { kComplement, kRandomSubset };

struct PayloadFlip {
  FlipMask mask = FlipMask::kComplement;
};
struct VanishingSymbol {
  std::uint32_t target = 0;
};
struct OddPackets {};

using AttackStrategy = std::variant<PayloadFlip, VanishingSymbol, OddPackets>;

// Victim orderings used by selective adversaries. The aligned policies pick a
// nonzero error pattern e and only corrupt packets with <r, e> = 1, which
// makes every corrupted packet agree with the same wrong block.
enum class VictimPolicy : std::uint8_t {
  kArrival,
  kReverse,
  kRandom,
  kSparsest,
  kDensest,
  kAlignedRandom,
  kAlignedUnit,
  kAlignedPair,
};

inline constexpr VictimPolicy kAllVictimPolicies[] = {
    VictimPolicy::kArrival,   VictimPolicy::kReverse,       VictimPolicy::kRandom,
    VictimPolicy::kSparsest,  VictimPolicy::kDensest,       VictimPolicy::kAlignedRandom,
    VictimPolicy::kAlignedUnit, VictimPolicy::kAlignedPair,
};

std::string_view policy_name(VictimPolicy policy);

struct AdversarySpec {
  Knowledge knowledge = Knowledge::kOffline;
  Selection selection = Selection::kUniform;
  CBound bound{1, 5};
  AttackStrategy strategy = PayloadFlip{};
  BoundReading reading = BoundReading::kPrefix;
  VictimPolicy policy = VictimPolicy::kArrival;   // selective only
  std::optional<std::size_t> max_corruptions;     // cap below the c-budget
};

template <typename P>
struct Delivery {
  std::vector<P> packets;
  std::vector<std::uint8_t> corrupted;  // ground truth, for scoring only

  std::size_t corrupted_count() const noexcept {
    std::size_t n = 0;
    for (const auto f : corrupted) n += f;
    return n;
  }
};

Delivery<coding::Packet> transmit(std::span<const coding::Packet> stream, const AdversarySpec& spec, Rng& rng);

Delivery<lt::LtPacket> transmit(std::span<const lt::LtPacket> stream, const AdversarySpec& spec, Rng& rng);

bool satisfies_bound(std::span<const std::uint8_t> corrupted, const CBound& bound,
                     BoundReading reading = BoundReading::kPrefix);

}  // namespace crfc::adversary
