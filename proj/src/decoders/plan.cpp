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

#include "crfc/decoders/plan.hpp"

#include <cmath>

#include "crfc/errors.hpp"

namespace crfc::decoders {

double DecodePlan::implied_c() const noexcept {
  return required_packets == 0 ? 0.0 : static_cast<double>(corruptions) / static_cast<double>(required_packets);
}

std::size_t DecodePlan::acceptance_threshold(std::size_t collected, Acceptance acceptance) const noexcept {
  if (acceptance == Acceptance::kFixedThreshold) return threshold;
  return collected > corruptions ? collected - corruptions : 0;
}

DecodePlan plan_uniform(std::size_t k, std::size_t f, std::size_t epsilon) {
  if (k == 0) throw PlanningError("k must be positive");
  if (f >= k) throw PlanningError("uniform plan needs f < k (f=" + std::to_string(f) + ", k=" + std::to_string(k) + ")");
  if (epsilon < 1) throw PlanningError("epsilon must be at least 1");
  DecodePlan p;
  p.k = k;
  p.model = UniformModel{f};
  p.epsilon = epsilon;
  p.required_packets = k + 2 * f + epsilon;
  p.threshold = k + f + epsilon;
  p.corruptions = f;
  return p;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double selective_exponent(double a, double b) { return a - b - 1 - a * binary_entropy(b / a); }

DecodePlan plan_selective(std::size_t k, double b, double step) {
  if (k == 0) throw PlanningError("k must be positive");
  if (!(b > 0)) throw PlanningError("b must be positive");
  if (!(step > 0)) throw PlanningError("grid step must be positive");
  double a = step;
  for (std::size_t j = 1;; ++j) {
    a = step * static_cast<double>(j);
    if (a > b && selective_exponent(a, b) > 0) break;
  }
  const auto kd = static_cast<double>(k);
  DecodePlan p;
  p.k = k;
  p.model = SelectiveModel{b, a};
  p.required_packets = static_cast<std::size_t>(std::ceil((a + b) * kd - 1e-9));
  p.threshold = static_cast<std::size_t>(std::ceil(a * kd - 1e-9));
  p.corruptions = static_cast<std::size_t>(std::floor(b * kd + 1e-9));
  return p;
}

double selective_failure_log2(std::size_t k, double a, double b) {
  return -static_cast<double>(k) * selective_exponent(a, b);
}

bool majority_applicable(double c, std::size_t k, std::size_t collected) {
  if (k == 0 || collected == 0) return false;
  return c <= 1.0 / (2.0 * static_cast<double>(k)) - 1.0 / (2.0 * static_cast<double>(collected));
}

std::size_t choose_g(std::size_t k, std::size_t f, std::size_t epsilon, double b_param) {
  if (!(b_param > 1)) throw PlanningError("b_param must exceed 1");
  const double bound = static_cast<double>(f) * static_cast<double>(k + epsilon) / std::log2(b_param);
  return static_cast<std::size_t>(std::floor(bound)) + 1;
}

double clean_subset_lower_bound(std::size_t k, std::size_t f, std::size_t epsilon, std::size_t g) {
  if (g == 0) return f == 0 ? 1.0 : 0.0;
  return std::exp(-static_cast<double>(f) * static_cast<double>(k + epsilon) / static_cast<double>(g));
}

double predicted_iterations(std::size_t k, std::size_t f, std::size_t epsilon, std::size_t g) {
  const double p_eps = 1.0 - std::ldexp(1.0, -static_cast<int>(epsilon));
  return 1.0 / (clean_subset_lower_bound(k, f, epsilon, g) * p_eps);
}

}  // namespace crfc::decoders
