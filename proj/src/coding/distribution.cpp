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

#include "crfc/coding/distribution.hpp"

#include <cmath>
#include <sstream>

#include "crfc/errors.hpp"

namespace crfc::coding {

CodingDistribution CodingDistribution::uniform() { return CodingDistribution{}; }

CodingDistribution CodingDistribution::log_sparse(std::size_t k, double delta, double window_c) {
  if (k < 2) throw UsageError("log-sparse distribution needs k >= 2");
  if (!(delta > 0.0)) throw UsageError("log-sparse delta must be positive");
  const double p = (1.0 + delta) * std::log2(static_cast<double>(k)) / static_cast<double>(k);
  CodingDistribution d;
  d.kind_ = Kind::kLogSparse;
  d.delta_ = delta;
  d.denominator_ = kDensityDenominator;
  d.numerator_ = static_cast<std::uint32_t>(std::llround(p * kDensityDenominator));
  if (!d.in_log_window(k, window_c)) {
    std::ostringstream msg;
    msg << "log-sparse density " << p << " at k=" << k << " is outside the window [(log2 k + c)/k, 1 - (log2 k + c)/k]"
        << " for c=" << window_c;
    throw UsageError(msg.str());
  }
  return d;
}

CodingDistribution CodingDistribution::from_ratio(std::uint32_t numerator, std::uint32_t denominator) {
  if (numerator == 0 || numerator >= denominator) throw UsageError("density ratio must lie strictly in (0, 1)");
  CodingDistribution d;
  d.numerator_ = numerator;
  d.denominator_ = denominator;
  if (2 * static_cast<std::uint64_t>(numerator) != denominator) d.kind_ = Kind::kLogSparse;
  return d;
}

bool CodingDistribution::in_log_window(std::size_t k, double window_c) const {
  const double lo = (std::log2(static_cast<double>(k)) + window_c) / static_cast<double>(k);
  const double p = density();
  return lo <= p && p <= 1.0 - lo;
}

BitVector CodingDistribution::sample(std::size_t k, Rng& rng) const {
  return sample_coding_vector(k, numerator_, denominator_, rng);
}

BitVector sample_coding_vector(std::size_t k, std::uint32_t numerator, std::uint32_t denominator, Rng& rng) {
  if (k == 0) throw UsageError("coding vectors need k >= 1");
  if (numerator == 0 || numerator >= denominator) throw UsageError("density ratio must lie strictly in (0, 1)");
  BitVector r(k);
  const bool half = 2 * static_cast<std::uint64_t>(numerator) == denominator;
  do {
    if (half) {
      for (auto& w : r.words()) w = rng.next_u64();
      r.clear_padding();
    } else {
      r.reset();
      for (std::size_t j = 0; j < k; ++j) {
        if (rng.bernoulli_ratio(numerator, denominator)) r.set(j);
      }
    }
  } while (r.none());
  return r;
}

}  // namespace crfc::coding
