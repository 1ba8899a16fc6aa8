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

namespace crfc::coding {

using gf2::BitVector;

/// How an n-bit message maps onto m blocks of k bits. The last `padding` bits
/// of the final block(s) are zero fill and not part of the message.
struct MessageLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t padding = 0;

  friend bool operator==(const MessageLayout&, const MessageLayout&) = default;
};

struct SplitMessage {
  MessageLayout layout;
  std::vector<BitVector> blocks;
};

/// Split `bits` into m blocks of k = ceil(n / m) bits, zero-padding the tail.
/// Throws UsageError when bits is empty, m == 0 or m > n.
SplitMessage split_message(const BitVector& bits, std::size_t m);

/// Concatenate blocks and drop the padding recorded in `layout`.
BitVector join_message(std::span<const BitVector> blocks, const MessageLayout& layout);

/// Byte i bit j (LSB first) becomes message bit 8 * i + j.
BitVector bits_from_bytes(std::span<const std::uint8_t> bytes);
/// Inverse of bits_from_bytes; a trailing partial byte is zero-filled.
std::vector<std::uint8_t> bytes_from_bits(const BitVector& bits);

}  // namespace crfc::coding
