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

// Compiled with -mavx2 only; reached through the dispatcher after a CPUID check.
#include <immintrin.h>

#include <bit>

#include "crfc/gf2/kernels.hpp"

namespace crfc::gf2::kernels {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

// Per-64-bit-lane popcount: nibble lookup with pshufb, then sad against zero
// sums the 8 byte counts of each lane.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

void xor_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(load(dst + i), load(src + i)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void xor_popcount_batch(const Word* base, const Word* table, std::size_t nwords, std::size_t entries,
                        std::uint32_t* out) {
  std::size_t e = 0;
  // Four entries per vector; accumulate all words of those entries in 64-bit lanes.
  for (; e + kLanes <= entries; e += kLanes) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t w = 0; w < nwords; ++w) {
      const __m256i b = _mm256_set1_epi64x(static_cast<long long>(base[w]));
      acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_xor_si256(b, load(table + w * entries + e))));
    }
    alignas(32) std::uint64_t lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::size_t l = 0; l < kLanes; ++l) out[e + l] = static_cast<std::uint32_t>(lanes[l]);
  }
  for (; e < entries; ++e) {
    std::uint32_t count = 0;
    for (std::size_t w = 0; w < nwords; ++w) {
      count += static_cast<std::uint32_t>(std::popcount(base[w] ^ table[w * entries + e]));
    }
    out[e] = count;
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static constexpr KernelTable table{xor_into, popcount, and_popcount, xor_popcount_batch};
  return table;
}

}  // namespace crfc::gf2::kernels
