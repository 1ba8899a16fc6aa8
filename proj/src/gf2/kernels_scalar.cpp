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

#include <bit>

#include "crfc/gf2/kernels.hpp"

namespace crfc::gf2::kernels {
namespace {

void xor_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void xor_popcount_batch(const Word* base, const Word* table, std::size_t nwords, std::size_t entries,
                        std::uint32_t* out) {
  for (std::size_t e = 0; e < entries; ++e) out[e] = 0;
  for (std::size_t w = 0; w < nwords; ++w) {
    const Word b = base[w];
    const Word* column = table + w * entries;
    for (std::size_t e = 0; e < entries; ++e) {
      out[e] += static_cast<std::uint32_t>(std::popcount(b ^ column[e]));
    }
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static constexpr KernelTable table{xor_into, popcount, and_popcount, xor_popcount_batch};
  return table;
}

}  // namespace crfc::gf2::kernels
