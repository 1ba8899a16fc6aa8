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
#include <random>
#include <span>

namespace crfc {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for stream `index` under `master`: splitmix64(splitmix64(master) ^ index).
/// Every trial, cell and source seed in the toolkit goes through this.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ index);
}

/// The one generator used throughout the toolkit.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++ standard.
/// All derived draws are defined here in integer arithmetic so the same seed
/// yields the same bits on every conforming platform:
///   - uniform_below(n): Lemire's multiply-shift rejection method.
///   - uniform01(): top 53 bits of one draw, scaled by 2^-53.
///   - bernoulli_ratio(num, den): (draw >> 32) * den < num * 2^32.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n). n must be nonzero.
  std::uint64_t uniform_below(std::uint64_t n);

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Exact Bernoulli(num/den) for den < 2^32, num <= den.
  bool bernoulli_ratio(std::uint32_t num, std::uint32_t den) {
    const std::uint64_t u = engine_() >> 32;
    return u * den < (static_cast<std::uint64_t>(num) << 32);
  }

  /// Derive a child generator for stream `index` without disturbing this one's
  /// sequence beyond a single draw.
  Rng split(std::uint64_t index) { return Rng(derive_seed(engine_(), index)); }

 private:
  std::mt19937_64 engine_;
};

/// Partial Fisher-Yates: the first `count` entries of `items` become a uniform
/// random sample without replacement.
template <typename T>
void partial_shuffle(std::span<T> items, std::size_t count, Rng& rng) {
  for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
    const auto j = i + rng.uniform_below(items.size() - i);
    std::swap(items[i], items[j]);
  }
}

}  // namespace crfc
