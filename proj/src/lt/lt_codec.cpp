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

#include "crfc/lt/lt_codec.hpp"

#include <algorithm>

#include "crfc/errors.hpp"

namespace crfc::lt {

bool LtPacket::contains(std::uint32_t symbol) const {
  return std::binary_search(neighbors.begin(), neighbors.end(), symbol);
}

std::vector<std::uint32_t> sample_neighbors(std::size_t k, std::size_t degree, Rng& rng) {
  if (degree > k) throw UsageError("degree exceeds the number of symbols");
  std::vector<std::uint32_t> chosen;
  chosen.reserve(degree);
  // Floyd: for j = k - degree .. k - 1 pick t in [0, j]; take t unless already
  // chosen, in which case take j.
  for (std::size_t j = k - degree; j < k; ++j) {
    const auto t = static_cast<std::uint32_t>(rng.uniform_below(j + 1));
    const auto pos = std::lower_bound(chosen.begin(), chosen.end(), t);
    if (pos != chosen.end() && *pos == t) {
      chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), static_cast<std::uint32_t>(j)),
                    static_cast<std::uint32_t>(j));
    } else {
      chosen.insert(pos, t);
    }
  }
  return chosen;
}

BitVector xor_of(std::span<const BitVector> symbols, std::span<const std::uint32_t> neighbors) {
  if (symbols.empty()) throw UsageError("no symbols");
  BitVector acc(symbols.front().size());
  for (const auto s : neighbors) acc ^= symbols[s];
  return acc;
}

LtPacket lt_encode_with_degree(std::span<const BitVector> symbols, std::size_t degree, Rng& rng) {
  if (symbols.empty()) throw UsageError("lt_encode needs at least one symbol");
  if (degree == 0) throw UsageError("LT packets have degree >= 1");
  LtPacket p;
  p.neighbors = sample_neighbors(symbols.size(), degree, rng);
  p.value = xor_of(symbols, p.neighbors);
  return p;
}

LtPacket lt_encode(std::span<const BitVector> symbols, const DegreeDistribution& dist, Rng& rng) {
  if (symbols.empty()) throw UsageError("lt_encode needs at least one symbol");
  const auto degree = std::min(dist.sample(rng), symbols.size());
  return lt_encode_with_degree(symbols, degree, rng);
}

}  // namespace crfc::lt
