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
#include <variant>

namespace crfc::decoders {

struct UniformModel {
  std::size_t f = 0;
};

struct SelectiveModel {
  double b = 0;
  double a = 0;
};

// How a candidate block is judged good. kFixedThreshold uses the fixed count
// from the plan; kAllButF requires every collected equation but the assumed
// corruptions to hold, which stays sound when more packets than planned arrive.
enum class Acceptance : std::uint8_t { kAllButF, kFixedThreshold };

struct DecodePlan {
  std::size_t k = 0;
  std::variant<UniformModel, SelectiveModel> model;
  std::size_t epsilon = 0;
  std::size_t required_packets = 0;
  std::size_t threshold = 0;    // satisfied equations out of required_packets
  std::size_t corruptions = 0;  // f, or floor(b * k)

  double implied_c() const noexcept;
  std::size_t acceptance_threshold(std::size_t collected, Acceptance acceptance) const noexcept;
};

// k + 2f + epsilon packets, threshold k + f + epsilon. Throws PlanningError
// unless f < k and epsilon >= 1.
DecodePlan plan_uniform(std::size_t k, std::size_t f, std::size_t epsilon);

double binary_entropy(double p);

// a - b - 1 - a * h(b / a).
double selective_exponent(double a, double b);

// Smallest a on the grid {step, 2 step, ...} with a > b and a positive
// exponent; ceil((a + b) k) packets, threshold ceil(a k).
DecodePlan plan_selective(std::size_t k, double b, double step = 0.5);

// log2 of the failure bound 2^(-k * exponent(a, b)).
double selective_failure_log2(std::size_t k, double a, double b);

// The majority decoder's c-bound: c <= 1/(2k) - 1/(2N).
bool majority_applicable(double c, std::size_t k, std::size_t collected);

// Smallest integer g > f (k + epsilon) / log2(b_param).
std::size_t choose_g(std::size_t k, std::size_t f, std::size_t epsilon, double b_param = 2.0);

// Lower bound exp(-f (k + epsilon) / g) on the chance a random (k + epsilon)
// subset of g + k + f + epsilon packets misses every corrupted one.
double clean_subset_lower_bound(std::size_t k, std::size_t f, std::size_t epsilon, std::size_t g);

// 1 / (p_k p_epsilon) with p_k from clean_subset_lower_bound and
// p_epsilon = 1 - 2^-epsilon.
double predicted_iterations(std::size_t k, std::size_t f, std::size_t epsilon, std::size_t g);

}  // namespace crfc::decoders
