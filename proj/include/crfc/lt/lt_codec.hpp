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
#include <span>
#include <vector>

#include "crfc/gf2/bit_vector.hpp"
#include "crfc/lt/degree_distribution.hpp"
#include "crfc/random.hpp"

namespace crfc::lt {

using gf2::BitVector;

/// Plain LT packet: explicit neighbor list and the xor of those symbols.
struct LtPacket {
  std::vector<std::uint32_t> neighbors;  // ascending, distinct
  BitVector value;

  std::size_t degree() const noexcept { return neighbors.size(); }
  bool contains(std::uint32_t symbol) const;

  friend bool operator==(const LtPacket&, const LtPacket&) = default;
};

/// `degree` distinct indices from [0, k), uniform over subsets (Floyd's
/// algorithm), returned ascending.
std::vector<std::uint32_t> sample_neighbors(std::size_t k, std::size_t degree, Rng& rng);

/// Degree from `dist` (capped at the symbol count), neighbors uniform among sets of that size.
LtPacket lt_encode(std::span<const BitVector> symbols, const DegreeDistribution& dist, Rng& rng);

/// Same with the degree fixed by the caller.
LtPacket lt_encode_with_degree(std::span<const BitVector> symbols, std::size_t degree, Rng& rng);

/// Xor of symbols[neighbors].
BitVector xor_of(std::span<const BitVector> symbols, std::span<const std::uint32_t> neighbors);

}  // namespace crfc::lt
