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

#include "crfc/gf2/bit_vector.hpp"
#include "crfc/random.hpp"

namespace crfc::coding {

using gf2::BitVector;

/// Law of the coding vector r. Density is carried as an exact ratio so a
/// receiver can rebuild r from a seed header without the encoder's config.
class CodingDistribution {
 public:
  enum class Kind { kUniform, kLogSparse };

  static constexpr std::uint32_t kDensityDenominator = std::uint32_t{1} << 30;
  static constexpr double kDefaultDelta = 1.0;
  static constexpr double kDefaultWindowC = 4.0;

  /// Every coordinate is 1 with probability 1/2.
  static CodingDistribution uniform();

  /// Density p = (1 + delta) * log2(k) / k, rounded to a multiple of 2^-30.
  /// Throws UsageError unless (log2 k + window_c) / k <= p <= 1 - (log2 k + window_c) / k.
  static CodingDistribution log_sparse(std::size_t k, double delta = kDefaultDelta,
                                       double window_c = kDefaultWindowC);

  /// Arbitrary density num / den with 0 < num < den < 2^32.
  static CodingDistribution from_ratio(std::uint32_t numerator, std::uint32_t denominator);

  Kind kind() const noexcept { return kind_; }
  double delta() const noexcept { return delta_; }
  std::uint32_t numerator() const noexcept { return numerator_; }
  std::uint32_t denominator() const noexcept { return denominator_; }
  double density() const noexcept { return static_cast<double>(numerator_) / denominator_; }

  bool in_log_window(std::size_t k, double window_c) const;

  /// Draw a nonzero coding vector of length k (all-zero draws are redrawn from
  /// the same stream).
  BitVector sample(std::size_t k, Rng& rng) const;

 private:
  Kind kind_ = Kind::kUniform;
  double delta_ = 0.0;
  std::uint32_t numerator_ = 1;
  std::uint32_t denominator_ = 2;
};

/// The documented sampler behind CodingDistribution::sample and seed headers.
/// Density exactly 1/2: one 64-bit draw per word, LSB-first, tail masked.
/// Otherwise: one bernoulli_ratio(num, den) draw per coordinate, in index order.
/// Repeats until the vector is nonzero. k must be >= 1.
BitVector sample_coding_vector(std::size_t k, std::uint32_t numerator, std::uint32_t denominator, Rng& rng);

}  // namespace crfc::coding
