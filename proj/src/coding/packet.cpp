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

#include "crfc/coding/packet.hpp"

#include "crfc/coding/distribution.hpp"
#include "crfc/errors.hpp"
#include "crfc/random.hpp"

namespace crfc::coding {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

BitVector expand_header(const Packet& packet) {
  const std::size_t k = packet.k;
  if (k == 0) throw MalformedPacket("packet has k = 0", 0);
  return std::visit(
      Overloaded{
          [&](const DenseHeader& h) {
            if (h.r.size() != k) throw MalformedPacket("dense header length differs from k", 0);
            return h.r;
          },
          [&](const IndexListHeader& h) {
            BitVector r(k);
            for (std::size_t i = 0; i < h.indices.size(); ++i) {
              const auto idx = h.indices[i];
              if (idx >= k) {
                throw MalformedPacket("index " + std::to_string(idx) + " >= k = " + std::to_string(k), 0);
              }
              if (i > 0 && idx <= h.indices[i - 1]) {
                throw MalformedPacket(idx == h.indices[i - 1] ? "duplicate index " + std::to_string(idx)
                                                              : "indices not ascending",
                                      0);
              }
              r.set(idx);
            }
            return r;
          },
          [&](const SeedHeader& h) {
            if (h.numerator == 0 || h.numerator >= h.denominator) {
              throw MalformedPacket("seed header density outside (0, 1)", 0);
            }
            Rng rng(h.seed);
            return sample_coding_vector(k, h.numerator, h.denominator, rng);
          },
      },
      packet.header);
}

BitVector expand_header(const Packet& packet, const MessageLayout& layout) {
  if (packet.k != layout.k) throw MalformedPacket("packet k does not match the message layout", 0);
  if (packet.m() != layout.m) throw MalformedPacket("packet payload width does not match the message layout", 0);
  return expand_header(packet);
}

Packet with_header_form(const Packet& packet, HeaderForm form) {
  if (packet.form() == form) return packet;
  Packet out{packet.k, {}, packet.payload};
  switch (form) {
    case HeaderForm::kDense:
      out.header = DenseHeader{expand_header(packet)};
      break;
    case HeaderForm::kIndexList:
      out.header = IndexListHeader{expand_header(packet).ones()};
      break;
    case HeaderForm::kSeed:
      throw UsageError("a seed header cannot be derived from an explicit coding vector");
  }
  return out;
}

}  // namespace crfc::coding
