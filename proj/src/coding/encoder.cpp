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

#include "crfc/coding/encoder.hpp"

#include "crfc/errors.hpp"

namespace crfc::coding {

BitVector payload_for(const BitVector& r, std::span<const BitVector> blocks) {
  BitVector payload(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (gf2::dot(r, blocks[i])) payload.set(i);
  }
  return payload;
}

Packet generate_packet(std::span<const BitVector> blocks, const CodingDistribution& dist, HeaderForm form,
                       Rng& rng) {
  if (blocks.empty()) throw UsageError("generate_packet needs at least one block");
  const auto k = blocks.front().size();
  for (const auto& b : blocks) {
    if (b.size() != k) throw UsageError("blocks must share one length");
  }
  const auto seed = rng.next_u64();
  Rng vector_rng(seed);
  auto r = dist.sample(k, vector_rng);

  Packet p{static_cast<std::uint32_t>(k), {}, payload_for(r, blocks)};
  switch (form) {
    case HeaderForm::kDense:
      p.header = DenseHeader{std::move(r)};
      break;
    case HeaderForm::kIndexList:
      p.header = IndexListHeader{r.ones()};
      break;
    case HeaderForm::kSeed:
      p.header = SeedHeader{seed, dist.numerator(), dist.denominator()};
      break;
  }
  return p;
}

Encoder::Encoder(SplitMessage message, CodingDistribution dist, HeaderForm form, std::uint64_t seed)
    : message_(std::move(message)), dist_(dist), form_(form), rng_(seed) {}

Packet Encoder::next() { return generate_packet(message_.blocks, dist_, form_, rng_); }

}  // namespace crfc::coding
