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
#include <string_view>

namespace crfc::gf2::kernels {

using Word = std::uint64_t;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Word-level primitives behind every GF(2) operation. Each ISA provides the
/// same table; results must be bit-identical across ISAs.
struct KernelTable {
  /// dst[i] ^= src[i] for i < n.
  void (*xor_into)(Word* dst, const Word* src, std::size_t n);
  /// Total set bits in a[0..n).
  std::size_t (*popcount)(const Word* a, std::size_t n);
  /// Set bits in (a & b)[0..n). Parity of this is the GF(2) inner product.
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  /// For each entry e < entries:
  ///   out[e] = sum over w < nwords of popcount(base[w] ^ table[w * entries + e]).
  /// `table` is word-major so consecutive entries of one word are contiguous.
  void (*xor_popcount_batch)(const Word* base, const Word* table, std::size_t nwords,
                             std::size_t entries, std::uint32_t* out);
};

const KernelTable& scalar_table();
#if defined(CRFC_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif

/// True when the ISA was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Table for an explicit ISA. Throws UsageError if unavailable.
const KernelTable& table_for(Isa isa);

/// Best available ISA, unless CRFC_ISA=scalar is set in the environment or a
/// test pinned one through force_isa().
Isa active_isa();
const KernelTable& active();

/// Pin the active ISA (tests and benchmarks). Not thread-safe against
/// concurrent kernel use; call before work starts.
void force_isa(Isa isa);
void reset_isa();

}  // namespace crfc::gf2::kernels
