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

#include "crfc/gf2/bit_matrix.hpp"
#include "crfc/random.hpp"

namespace crfc::gf2 {

/// Entry law for random_matrix.
struct Ensemble {
  enum class Kind { kUniform, kBernoulli };
  Kind kind = Kind::kUniform;
  double p = 0.5;

  static Ensemble uniform() { return {}; }
  static Ensemble bernoulli(double p) { return {Kind::kBernoulli, p}; }
};

/// rows x cols matrix with i.i.d. entries. Uniform fills whole 64-bit draws
/// LSB-first, one draw per word; Bernoulli draws one uniform01() per entry in
/// row-major order. Throws UsageError for Bernoulli with p outside (0, 1).
BitMatrix random_matrix(std::size_t rows, std::size_t cols, const Ensemble& ensemble, Rng& rng);

/// Limit of P[rank < k] for a (k + d) x k random matrix as k grows:
/// 1 - prod_{j = d+1}^{inf} (1 - 2^-j). The product is taken to j = d + 64;
/// the remaining factors differ from 1 by less than 2^-(d+64) combined.
double rank_failure_limit(std::size_t d);

}  // namespace crfc::gf2
