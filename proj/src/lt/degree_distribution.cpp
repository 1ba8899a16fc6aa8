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

#include "crfc/lt/degree_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "crfc/errors.hpp"

namespace crfc::lt {

DegreeDistribution::DegreeDistribution(std::vector<double> pmf, std::size_t spike)
    : pmf_(std::move(pmf)), cdf_(pmf_.size()), spike_(spike) {
  std::partial_sum(pmf_.begin(), pmf_.end(), cdf_.begin());
  cdf_.back() = 1.0;
}

DegreeDistribution DegreeDistribution::ideal_soliton(std::size_t k) {
  if (k < 2) throw UsageError("Soliton distributions need k >= 2");
  std::vector<double> pmf(k + 1, 0.0);
  pmf[1] = 1.0 / static_cast<double>(k);
  for (std::size_t i = 2; i <= k; ++i) pmf[i] = 1.0 / (static_cast<double>(i) * static_cast<double>(i - 1));
  return DegreeDistribution(std::move(pmf));
}

DegreeDistribution DegreeDistribution::robust_soliton(std::size_t k, double c, double delta) {
  if (k < 2) throw UsageError("Soliton distributions need k >= 2");
  if (!(c > 0.0)) throw UsageError("Robust Soliton c must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("Robust Soliton delta must lie in (0, 1)");
  const auto kd = static_cast<double>(k);
  const double r = c * std::log(kd / delta) * std::sqrt(kd);
  const auto spike = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(kd / r)), 1, k);

  auto ideal = ideal_soliton(k).pmf_;
  std::vector<double> pmf(k + 1, 0.0);
  for (std::size_t i = 1; i <= k; ++i) {
    double tau = 0.0;
    if (i < spike) {
      tau = r / (static_cast<double>(i) * kd);
    } else if (i == spike) {
      tau = std::max(0.0, r * std::log(r / delta) / kd);
    }
    pmf[i] = ideal[i] + tau;
  }
  const double beta = std::accumulate(pmf.begin(), pmf.end(), 0.0);
  for (auto& p : pmf) p /= beta;
  return DegreeDistribution(std::move(pmf), spike);
}

DegreeDistribution DegreeDistribution::from_weights(std::vector<double> weights) {
  if (weights.size() < 2) throw UsageError("degree weights must cover at least degree 1");
  if (weights[0] != 0.0) throw UsageError("degree 0 must have zero weight");
  double total = 0.0;
  for (const auto w : weights) {
    if (!(w >= 0.0)) throw UsageError("degree weights must be nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw UsageError("degree weights must not all be zero");
  for (auto& w : weights) w /= total;
  return DegreeDistribution(std::move(weights));
}

double DegreeDistribution::odd_mass() const {
  double mass = 0.0;
  for (std::size_t d = 1; d < pmf_.size(); d += 2) mass += pmf_[d];
  return mass;
}

double DegreeDistribution::mean() const {
  double m = 0.0;
  for (std::size_t d = 1; d < pmf_.size(); ++d) m += static_cast<double>(d) * pmf_[d];
  return m;
}

std::size_t DegreeDistribution::sample(Rng& rng) const {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  auto degree = static_cast<std::size_t>(it - cdf_.begin());
  // Zero-probability degrees can only be hit through rounding at their left edge.
  while (degree < pmf_.size() - 1 && pmf_[degree] == 0.0) ++degree;
  return degree;
}

double odd_degree_fraction(const DegreeDistribution& dist, std::size_t trials, Rng& rng) {
  if (trials == 0) throw UsageError("odd_degree_fraction needs at least one trial");
  std::size_t odd = 0;
  for (std::size_t t = 0; t < trials; ++t) odd += dist.sample(rng) & 1U;
  return static_cast<double>(odd) / static_cast<double>(trials);
}

}  // namespace crfc::lt
