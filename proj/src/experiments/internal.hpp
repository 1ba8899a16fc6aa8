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

#include <span>
#include <string>

#include <json.hpp>

#include "crfc/experiments/config.hpp"
#include "crfc/experiments/harness.hpp"

namespace crfc::experiments::detail {

nlohmann::json config_echo(const Config& config);

// Counts, success rate with a 95% Wilson interval, outcome histogram and
// iteration / metric statistics for one cell.
nlohmann::json summarize_cell(std::span<const TrialRecord> records);

std::string fmt_double(double v);

}  // namespace crfc::experiments::detail
