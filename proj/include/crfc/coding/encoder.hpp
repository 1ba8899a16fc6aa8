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
#include <span>

#include "crfc/coding/distribution.hpp"
#include "crfc/coding/message.hpp"
#include "crfc/coding/packet.hpp"
#include "crfc/random.hpp"

namespace crfc::coding {

/// Payload bit i = <r, blocks[i]>.
BitVector payload_for(const BitVector& r, std::span<const BitVector> blocks);

/// One packet. A fresh 64-bit seed is drawn from `rng`; r comes from
/// sample_coding_vector under that seed, so every header form describes the
/// same r and seed headers can be expanded by the receiver.
Packet generate_packet(std::span<const BitVector> blocks, const CodingDistribution& dist, HeaderForm form,
                       Rng& rng);

/// Stateful packet source for one message. Independent sources are separate
/// Encoder values with distinct seeds; nothing is shared between them.
class Encoder {
 public:
  Encoder(SplitMessage message, CodingDistribution dist, HeaderForm form, std::uint64_t seed);

  Packet next();
  const MessageLayout& layout() const noexcept { return message_.layout; }
  const std::vector<BitVector>& blocks() const noexcept { return message_.blocks; }
  const CodingDistribution& distribution() const noexcept { return dist_; }

 private:
  SplitMessage message_;
  CodingDistribution dist_;
  HeaderForm form_;
  Rng rng_;
};

}  // namespace crfc::coding
