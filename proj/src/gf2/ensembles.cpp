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

#include "crfc/gf2/ensembles.hpp"

#include <cmath>

#include "crfc/errors.hpp"

namespace crfc::gf2 {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, const Ensemble& ensemble, Rng& rng) {
  if (ensemble.kind == Ensemble::Kind::kBernoulli && !(ensemble.p > 0.0 && ensemble.p < 1.0)) {
    throw UsageError("Bernoulli ensemble requires 0 < p < 1");
  }
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto& row = m.row(r);
    if (ensemble.kind == Ensemble::Kind::kUniform) {
      for (auto& w : row.words()) w = rng.next_u64();
      row.clear_padding();
    } else {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng.bernoulli(ensemble.p)) row.set(c);
      }
    }
  }
  return m;
}

double rank_failure_limit(std::size_t d) {
  // log of the product; the factors beyond j = d + 64 contribute < 2^-(d+64).
  double log_product = 0.0;
  for (std::size_t j = d + 1; j <= d + 64; ++j) log_product += std::log1p(-std::ldexp(1.0, -static_cast<int>(j)));
  return -std::expm1(log_product);
}

}  // namespace crfc::gf2
