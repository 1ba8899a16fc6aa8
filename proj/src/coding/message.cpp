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

#include "crfc/coding/message.hpp"

#include "crfc/errors.hpp"

namespace crfc::coding {

SplitMessage split_message(const BitVector& bits, std::size_t m) {
  const auto n = bits.size();
  if (n == 0) throw UsageError("cannot split an empty message");
  if (m == 0) throw UsageError("block count must be at least 1");
  if (m > n) {
    throw UsageError("block count " + std::to_string(m) + " exceeds message length " + std::to_string(n));
  }
  const auto k = (n + m - 1) / m;
  SplitMessage out{MessageLayout{n, m, k, m * k - n}, {}};
  out.blocks.reserve(m);
  for (std::size_t b = 0; b < m; ++b) {
    BitVector block(k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto pos = b * k + j;
      if (pos < n && bits.get(pos)) block.set(j);
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

BitVector join_message(std::span<const BitVector> blocks, const MessageLayout& layout) {
  if (blocks.size() != layout.m) throw UsageError("block count does not match layout");
  BitVector bits(layout.n);
  for (std::size_t b = 0; b < layout.m; ++b) {
    if (blocks[b].size() != layout.k) throw UsageError("block length does not match layout");
    for (const auto j : blocks[b].ones()) {
      const auto pos = b * layout.k + j;
      if (pos < layout.n) bits.set(pos);
    }
  }
  return bits;
}

BitVector bits_from_bytes(std::span<const std::uint8_t> bytes) {
  BitVector bits(bytes.size() * 8);
  auto words = bits.words();
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    words[i / 8] |= static_cast<BitVector::Word>(bytes[i]) << (8 * (i % 8));
  }
  return bits;
}

std::vector<std::uint8_t> bytes_from_bits(const BitVector& bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  const auto words = bits.words();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

}  // namespace crfc::coding
