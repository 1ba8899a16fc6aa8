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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crfc/gf2/kernels.hpp"

namespace crfc::gf2 {

/// Fixed-length vector over GF(2).
///
/// Bits are packed LSB-first into 64-bit words: bit i lives in word i / 64 at
/// position i % 64. Bits at positions >= size() are always zero, so word-wise
/// equality and popcount need no masking.
class BitVector {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

  /// Parse "1011..." where character i is bit i. Throws UsageError on other characters.
  static BitVector from_string(std::string_view bits);
  /// Unit vector e_index of length len.
  static BitVector unit(std::size_t len, std::size_t index);
  /// Vector of length len with the listed positions set.
  static BitVector from_indices(std::size_t len, std::span<const std::uint32_t> indices);
  /// Low `len` bits of `value`, bit 0 first (len <= 64).
  static BitVector from_u64(std::size_t len, std::uint64_t value);

  static constexpr std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void reset() { std::fill(words_.begin(), words_.end(), Word{0}); }

  /// Complement every bit in [0, size()).
  void complement();

  std::span<const Word> words() const noexcept { return words_; }
  /// Mutable words. Callers that write must leave padding bits zero or call clear_padding().
  std::span<Word> words() noexcept { return words_; }
  void clear_padding();

  /// Low 64 bits as an integer (bit 0 is the LSB).
  std::uint64_t to_u64() const { return words_.empty() ? 0 : words_[0]; }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  std::size_t popcount() const;
  bool none() const;
  bool any() const { return !none(); }

  /// Indices of set bits in ascending order.
  std::vector<std::uint32_t> ones() const;

  /// Copy bits [offset, offset + len) into a new vector.
  BitVector slice(std::size_t offset, std::size_t len) const;

  std::string to_string() const;

  friend bool operator==(const BitVector& a, const BitVector& b) = default;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// GF(2) inner product. Throws UsageError when lengths differ.
bool dot(const BitVector& a, const BitVector& b);

}  // namespace crfc::gf2
