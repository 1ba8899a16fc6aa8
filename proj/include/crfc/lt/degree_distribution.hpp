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
#include <span>
#include <vector>

#include "crfc/random.hpp"

namespace crfc::lt {

/// Law of the number of symbols xored into an LT packet, over degrees 1..k.
class DegreeDistribution {
 public:
  /// P[1] = 1/k, P[i] = 1/(i(i-1)) for 2 <= i <= k. Requires k >= 2.
  static DegreeDistribution ideal_soliton(std::size_t k);

  /// Ideal Soliton plus the spike term, normalized:
  ///   R = c * ln(k / delta) * sqrt(k), spike s = round(k / R) clamped to [1, k]
  ///   tau(i) = R / (i k) for i < s, tau(s) = R ln(R / delta) / k, 0 above s.
  static DegreeDistribution robust_soliton(std::size_t k, double c = 0.1, double delta = 0.05);

  /// weights[d] is the relative weight of degree d; weights[0] must be 0.
  static DegreeDistribution from_weights(std::vector<double> weights);

  std::size_t k() const noexcept { return pmf_.size() - 1; }
  double probability(std::size_t degree) const { return degree < pmf_.size() ? pmf_[degree] : 0.0; }
  std::span<const double> pmf() const noexcept { return pmf_; }
  /// Exact mass on odd degrees.
  double odd_mass() const;
  double mean() const;
  /// Spike position for Robust Soliton, 0 otherwise.
  std::size_t spike() const noexcept { return spike_; }

  /// Inverse-CDF draw from one uniform01().
  std::size_t sample(Rng& rng) const;

 private:
  explicit DegreeDistribution(std::vector<double> pmf, std::size_t spike = 0);

  std::vector<double> pmf_;  // index = degree
  std::vector<double> cdf_;
  std::size_t spike_ = 0;
};

/// Fraction of `trials` sampled degrees that are odd. Throws UsageError if trials == 0.
double odd_degree_fraction(const DegreeDistribution& dist, std::size_t trials, Rng& rng);

}  // namespace crfc::lt
