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

#include "crfc/gf2/bit_vector.hpp"

#include "crfc/errors.hpp"

namespace crfc::gf2 {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw UsageError("bit string may contain only '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
  if (index >= len) throw UsageError("unit vector index out of range");
  BitVector v(len);
  v.set(index);
  return v;
}

BitVector BitVector::from_indices(std::size_t len, std::span<const std::uint32_t> indices) {
  BitVector v(len);
  for (const auto i : indices) {
    if (i >= len) throw UsageError("index " + std::to_string(i) + " out of range for length " + std::to_string(len));
    v.set(i);
  }
  return v;
}

BitVector BitVector::from_u64(std::size_t len, std::uint64_t value) {
  if (len > kWordBits) throw UsageError("from_u64 supports at most 64 bits");
  BitVector v(len);
  if (len > 0) {
    v.words_[0] = value;
    v.clear_padding();
  }
  return v;
}

void BitVector::clear_padding() {
  const auto tail = len_ % kWordBits;
  if (tail != 0) words_.back() &= (Word{1} << tail) - 1;
}

void BitVector::complement() {
  for (auto& w : words_) w = ~w;
  clear_padding();
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.len_ != len_) throw UsageError("xor of vectors with different lengths");
  kernels::active().xor_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

std::size_t BitVector::popcount() const { return kernels::active().popcount(words_.data(), words_.size()); }

bool BitVector::none() const {
  for (const auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> BitVector::ones() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

BitVector BitVector::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > len_) throw UsageError("slice out of range");
  BitVector out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (get(offset + i)) out.set(i);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

bool dot(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw UsageError("inner product of vectors with different lengths");
  return (kernels::active().and_popcount(a.words().data(), b.words().data(), a.words().size()) & 1U) != 0;
}

}  // namespace crfc::gf2
