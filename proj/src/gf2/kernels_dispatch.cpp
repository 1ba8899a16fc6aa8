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

#include <atomic>
#include <cstdlib>
#include <string>

#include "crfc/errors.hpp"
#include "crfc/gf2/kernels.hpp"

namespace crfc::gf2::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(CRFC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("CRFC_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::kScalar;
  }
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<int> forced{-1};

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_available(isa)) {
    throw UsageError("kernel ISA '" + std::string(isa_name(isa)) + "' is not available on this CPU");
  }
#if defined(CRFC_HAVE_AVX2_KERNELS)
  if (isa == Isa::kAvx2) return avx2_table();
#endif
  return scalar_table();
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa detected = detect();
  return detected;
}

const KernelTable& active() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return table_for(static_cast<Isa>(f));
  static const KernelTable& selected = table_for(active_isa());
  return selected;
}

void force_isa(Isa isa) {
  table_for(isa);  // validates availability
  forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { forced.store(-1, std::memory_order_relaxed); }

}  // namespace crfc::gf2::kernels
