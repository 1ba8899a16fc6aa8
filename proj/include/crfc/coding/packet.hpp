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

#include <cstdint>
#include <variant>
#include <vector>

#include "crfc/coding/message.hpp"
#include "crfc/gf2/bit_vector.hpp"

namespace crfc::coding {

using gf2::BitVector;

enum class HeaderForm : std::uint8_t { kDense = 0, kIndexList = 1, kSeed = 2 };

/// r sent verbatim.
struct DenseHeader {
  BitVector r;
  friend bool operator==(const DenseHeader&, const DenseHeader&) = default;
};

/// Positions of the ones of r, ascending and distinct.
struct IndexListHeader {
  std::vector<std::uint32_t> indices;
  friend bool operator==(const IndexListHeader&, const IndexListHeader&) = default;
};

/// r is regenerated by sample_coding_vector(k, numerator, denominator, Rng(seed)).
struct SeedHeader {
  std::uint64_t seed = 0;
  std::uint32_t numerator = 1;
  std::uint32_t denominator = 2;
  friend bool operator==(const SeedHeader&, const SeedHeader&) = default;
};

using Header = std::variant<DenseHeader, IndexListHeader, SeedHeader>;

/// One encoded packet: a description of r plus payload bit i = <r, b_i>.
struct Packet {
  std::uint32_t k = 0;
  Header header;
  BitVector payload;

  HeaderForm form() const noexcept { return static_cast<HeaderForm>(header.index()); }
  std::size_t m() const noexcept { return payload.size(); }

  friend bool operator==(const Packet&, const Packet&) = default;
};

/// The coding vector described by the header. Throws MalformedPacket (offset 0)
/// for an index >= k, unsorted or duplicate indices, a dense vector of the
/// wrong length, or an invalid seed density.
BitVector expand_header(const Packet& packet);

/// As above, and also checks the packet against the receiver's layout.
BitVector expand_header(const Packet& packet, const MessageLayout& layout);

/// The same packet with its header re-expressed in `form`. Seed form can only
/// be produced from a packet that already carries a seed.
Packet with_header_form(const Packet& packet, HeaderForm form);

}  // namespace crfc::coding
