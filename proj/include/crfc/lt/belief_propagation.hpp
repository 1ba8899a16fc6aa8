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
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "crfc/lt/lt_codec.hpp"

namespace crfc::lt {

/// Bipartite packet/symbol graph the peeling decoder works on. An edge
/// (packet, symbol) exists while the symbol is unresolved and listed by the packet.
class PeelingGraph {
 public:
  PeelingGraph(std::span<const LtPacket> packets, std::size_t symbols);

  std::size_t packet_count() const noexcept { return values_.size(); }
  std::size_t symbol_count() const noexcept { return resolved_.size(); }

  bool resolved(std::uint32_t symbol) const { return resolved_[symbol].has_value(); }
  const std::optional<BitVector>& symbol(std::uint32_t s) const { return resolved_[s]; }

  /// Current packet value: the original xor with every resolved neighbor removed.
  const BitVector& value(std::size_t packet) const { return values_[packet]; }
  std::size_t degree(std::size_t packet) const { return degree_[packet]; }
  /// Neighbors of `packet` that are still unresolved.
  std::vector<std::uint32_t> current_neighbors(std::size_t packet) const;

 private:
  friend class PeelingDecoder;

  std::vector<std::vector<std::uint32_t>> neighbors_;
  std::vector<std::vector<std::uint32_t>> packets_of_symbol_;
  std::vector<BitVector> values_;
  std::vector<std::size_t> degree_;
  std::vector<std::optional<BitVector>> resolved_;
};

inline constexpr std::uint32_t kNoSymbol = std::numeric_limits<std::uint32_t>::max();

/// A packet whose last edge was peeled away but whose value is not zero.
struct BpInconsistency {
  std::size_t packet;
  std::uint32_t symbol;  // the symbol whose removal exposed it, or kNoSymbol
};

struct BpResult {
  bool complete = false;  // Decoded; otherwise Stalled
  std::vector<std::optional<BitVector>> symbols;
  std::vector<std::uint32_t> unresolved;
  std::vector<std::uint32_t> decode_order;
  /// Packets still holding unresolved neighbors when decoding stopped,
  /// reduced to those neighbors.
  std::vector<LtPacket> residual;
  std::vector<BpInconsistency> inconsistencies;

  std::size_t decoded_count() const noexcept { return decode_order.size(); }
};

/// Called after each symbol is resolved and xored out of its packets.
using BpObserver = std::function<void(const PeelingGraph&, std::uint32_t resolved_symbol)>;

/// Peeling decoder over `symbols` input symbols. Degree-1 packets are taken
/// from a FIFO queue in the order they become degree 1 (input order first).
BpResult bp_decode(std::span<const LtPacket> packets, std::size_t symbols, const BpObserver& observer = {});

}  // namespace crfc::lt
