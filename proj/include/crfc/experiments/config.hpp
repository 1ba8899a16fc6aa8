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
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crfc/errors.hpp"

namespace crfc::experiments {

class ConfigError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Flat `key = value` document. Values are scalars (numbers, booleans, quoted
// or bare strings) or one-level arrays of scalars. `#` starts a comment.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  void set(const std::string& key, std::vector<std::string> items);

  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::uint64_t> get_uint_list(const std::string& key, std::vector<std::uint64_t> fallback) const;
  std::vector<double> get_double_list(const std::string& key, std::vector<double> fallback) const;
  std::vector<std::string> get_string_list(const std::string& key, std::vector<std::string> fallback) const;

  // Throws ConfigError naming the first key not in `allowed`.
  void reject_unknown(const std::set<std::string>& allowed) const;

  const std::map<std::string, std::vector<std::string>>& entries() const noexcept { return entries_; }

 private:
  const std::vector<std::string>* find(const std::string& key) const;

  std::map<std::string, std::vector<std::string>> entries_;
  std::set<std::string> arrays_;
};

}  // namespace crfc::experiments
