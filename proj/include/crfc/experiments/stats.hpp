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

namespace crfc::experiments {

struct Interval {
  double lo = 0;
  double hi = 1;
};

// Wilson score interval for `hits` out of `n`; z = 1.96 gives 95%.
Interval wilson(std::size_t hits, std::size_t n, double z = 1.96);

// Binomial standard error sqrt(p (1 - p) / n).
double binomial_sigma(double p, std::size_t n);

}  // namespace crfc::experiments
