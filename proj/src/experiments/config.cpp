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

#include "crfc/experiments/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace crfc::experiments {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

std::string scalar(std::string_view raw, std::size_t line_no) {
  raw = trim(raw);
  if (raw.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty value");
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') throw ConfigError("line " + std::to_string(line_no) + ": unterminated string");
    return std::string(raw.substr(1, raw.size() - 2));
  }
  return std::string(raw);
}

std::vector<std::string> split_array(std::string_view body, std::size_t line_no) {
  std::vector<std::string> items;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '"') quoted = !quoted;
    if (i == body.size() || (body[i] == ',' && !quoted)) {
      const auto piece = trim(body.substr(start, i - start));
      if (!piece.empty()) items.push_back(scalar(piece, line_no));
      start = i + 1;
    }
  }
  return items;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* want) {
  throw ConfigError("key '" + key + "': expected " + want + ", got '" + value + "'");
}

std::uint64_t to_uint(const std::string& key, const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) bad_value(key, s, "a non-negative integer");
  return v;
}

double to_double(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    bad_value(key, s, "a number");
  }
  if (used != s.size()) bad_value(key, s, "a number");
  return v;
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const auto line = strip_comment(raw);
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(body.substr(0, eq)));
    if (key.empty() || key.find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789_") != std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": bad key '" + key + "'");
    }
    if (cfg.entries_.count(key)) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    const auto value = trim(body.substr(eq + 1));
    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated array");
      cfg.entries_[key] = split_array(value.substr(1, value.size() - 2), line_no);
      cfg.arrays_.insert(key);
    } else {
      cfg.entries_[key] = {scalar(value, line_no)};
    }
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void Config::set(const std::string& key, std::vector<std::string> items) {
  if (items.size() != 1) arrays_.insert(key);
  entries_[key] = std::move(items);
}

const std::vector<std::string>* Config::find(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  if (v->size() != 1 || arrays_.count(key)) throw ConfigError("key '" + key + "' must be a single value");
  return v->front();
}

std::uint64_t Config::get_uint(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? to_uint(key, get_string(key, "")) : fallback;
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? to_double(key, get_string(key, "")) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const auto s = get_string(key, "");
  if (s == "true") return true;
  if (s == "false") return false;
  bad_value(key, s, "true or false");
}

std::vector<std::uint64_t> Config::get_uint_list(const std::string& key, std::vector<std::uint64_t> fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::vector<std::uint64_t> out;
  for (const auto& s : *v) out.push_back(to_uint(key, s));
  if (out.empty()) throw ConfigError("key '" + key + "' is an empty list");
  return out;
}

std::vector<double> Config::get_double_list(const std::string& key, std::vector<double> fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& s : *v) out.push_back(to_double(key, s));
  if (out.empty()) throw ConfigError("key '" + key + "' is an empty list");
  return out;
}

std::vector<std::string> Config::get_string_list(const std::string& key, std::vector<std::string> fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  if (v->empty()) throw ConfigError("key '" + key + "' is an empty list");
  return *v;
}

void Config::reject_unknown(const std::set<std::string>& allowed) const {
  for (const auto& [key, value] : entries_) {
    if (!allowed.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
}

}  // namespace crfc::experiments
