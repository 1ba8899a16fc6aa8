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

#include "crfc/adversary/channel.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "crfc/errors.hpp"
#include "crfc/gf2/bit_vector.hpp"

namespace crfc::adversary {

using gf2::BitVector;

namespace {

constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 31;

// Range add / range min over positions [0, n).
class SlackTree {
 public:
  explicit SlackTree(const std::vector<std::int64_t>& init) : n_(init.size()), min_(4 * n_ + 4), lazy_(4 * n_ + 4) {
    if (n_ > 0) build(1, 0, n_ - 1, init);
  }

  std::int64_t min(std::size_t l, std::size_t r) { return query(1, 0, n_ - 1, l, r); }
  void add(std::size_t l, std::size_t r, std::int64_t v) { update(1, 0, n_ - 1, l, r, v); }

 private:
  void build(std::size_t node, std::size_t lo, std::size_t hi, const std::vector<std::int64_t>& init) {
    if (lo == hi) {
      min_[node] = init[lo];
      return;
    }
    const auto mid = (lo + hi) / 2;
    build(2 * node, lo, mid, init);
    build(2 * node + 1, mid + 1, hi, init);
    min_[node] = std::min(min_[2 * node], min_[2 * node + 1]);
  }

  std::int64_t query(std::size_t node, std::size_t lo, std::size_t hi, std::size_t l, std::size_t r) {
    if (r < lo || hi < l) return std::numeric_limits<std::int64_t>::max();
    if (l <= lo && hi <= r) return min_[node];
    const auto mid = (lo + hi) / 2;
    return lazy_[node] + std::min(query(2 * node, lo, mid, l, r), query(2 * node + 1, mid + 1, hi, l, r));
  }

  void update(std::size_t node, std::size_t lo, std::size_t hi, std::size_t l, std::size_t r, std::int64_t v) {
    if (r < lo || hi < l) return;
    if (l <= lo && hi <= r) {
      min_[node] += v;
      lazy_[node] += v;
      return;
    }
    const auto mid = (lo + hi) / 2;
    update(2 * node, lo, mid, l, r, v);
    update(2 * node + 1, mid + 1, hi, l, r, v);
    min_[node] = lazy_[node] + std::min(min_[2 * node], min_[2 * node + 1]);
  }

  std::size_t n_;
  std::vector<std::int64_t> min_;
  std::vector<std::int64_t> lazy_;
};

// What victim selection needs to know about a stream: each packet's support
// (coding vector or neighbor set) and whether the strategy can touch it.
struct StreamView {
  std::size_t k = 0;
  std::vector<BitVector> support;
  std::vector<std::uint8_t> eligible;
};

std::vector<std::uint8_t> eligibility(const StreamView& view, const AttackStrategy& strategy) {
  std::vector<std::uint8_t> out(view.support.size(), 1);
  if (const auto* v = std::get_if<VanishingSymbol>(&strategy)) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = v->target < view.k && view.support[i].get(v->target);
    }
  } else if (std::holds_alternative<OddPackets>(strategy)) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = view.support[i].popcount() % 2 == 1;
  }
  return out;
}

std::optional<BitVector> error_pattern(VictimPolicy policy, std::size_t k, Rng& rng) {
  if (k == 0) return std::nullopt;
  switch (policy) {
    case VictimPolicy::kAlignedRandom: {
      BitVector e(k);
      while (e.none()) {
        for (std::size_t i = 0; i < k; ++i) e.set(i, rng.next_u64() & 1U);
      }
      return e;
    }
    case VictimPolicy::kAlignedUnit:
      return BitVector::unit(k, rng.uniform_below(k));
    case VictimPolicy::kAlignedPair: {
      BitVector e = BitVector::unit(k, rng.uniform_below(k));
      if (k >= 2) {
        std::size_t j;
        do {
          j = rng.uniform_below(k);
        } while (e.get(j));
        e.set(j);
      }
      return e;
    }
    default:
      return std::nullopt;
  }
}

class VictimSelector {
 public:
  VictimSelector(std::size_t n, const AdversarySpec& spec) : n_(n), spec_(spec), flags_(n, 0) {
    cap_ = spec.bound.budget(n);
    if (spec.max_corruptions) cap_ = std::min(cap_, *spec.max_corruptions);
    if (spec.reading == BoundReading::kPrefix && n > 0) {
      std::vector<std::int64_t> slack(n);
      for (std::size_t j = 0; j < n; ++j) slack[j] = static_cast<std::int64_t>(spec.bound.budget(j + 1));
      tree_.emplace(slack);
    }
  }

  // Offline: accept i if the whole future stays within budget.
  bool try_accept(std::size_t i) {
    if (flags_[i] || count_ >= cap_) return false;
    if (tree_) {
      if (tree_->min(i, n_ - 1) < 1) return false;
      tree_->add(i, n_ - 1, -1);
    }
    flags_[i] = 1;
    ++count_;
    return true;
  }

  // Online: only the prefix ending at i is known to be final.
  bool try_accept_online(std::size_t i) {
    if (count_ >= cap_) return false;
    if (spec_.reading == BoundReading::kPrefix && count_ + 1 > spec_.bound.budget(i + 1)) return false;
    flags_[i] = 1;
    ++count_;
    return true;
  }

  std::vector<std::uint8_t> take() { return std::move(flags_); }

 private:
  std::size_t n_;
  const AdversarySpec& spec_;
  std::vector<std::uint8_t> flags_;
  std::size_t cap_ = 0;
  std::size_t count_ = 0;
  std::optional<SlackTree> tree_;
};

std::vector<std::uint8_t> choose_victims(const StreamView& view, const AdversarySpec& spec, Rng& rng) {
  const auto n = view.support.size();
  VictimSelector selector(n, spec);

  const bool selective = spec.selection == Selection::kSelective;
  const auto e = selective ? error_pattern(spec.policy, view.k, rng) : std::nullopt;
  auto admissible = [&](std::size_t i) {
    if (!view.eligible[i]) return false;
    return !e || gf2::dot(view.support[i], *e);
  };

  if (spec.knowledge == Knowledge::kOnline) {
    // Online selective adversaries cannot rank what they have not seen yet, so
    // they corrupt every admissible packet while the budget allows.
    for (std::size_t i = 0; i < n; ++i) {
      if (!admissible(i)) continue;
      if (!selective && !rng.bernoulli_ratio(static_cast<std::uint32_t>(spec.bound.numerator()),
                                             static_cast<std::uint32_t>(spec.bound.denominator()))) {
        continue;
      }
      selector.try_accept_online(i);
    }
    return selector.take();
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (admissible(i)) order.push_back(i);
  }
  if (!selective || spec.policy == VictimPolicy::kRandom) {
    std::shuffle(order.begin(), order.end(), rng);
  } else if (spec.policy == VictimPolicy::kReverse) {
    std::reverse(order.begin(), order.end());
  } else if (spec.policy == VictimPolicy::kSparsest || spec.policy == VictimPolicy::kDensest) {
    std::vector<std::size_t> weight(n);
    for (const auto i : order) weight[i] = view.support[i].popcount();
    const bool asc = spec.policy == VictimPolicy::kSparsest;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return asc ? weight[a] < weight[b] : weight[a] > weight[b]; });
  }
  for (const auto i : order) selector.try_accept(i);
  return selector.take();
}

BitVector flip_mask(std::size_t m, FlipMask policy, Rng& rng) {
  BitVector mask(m);
  if (policy == FlipMask::kComplement || m == 0) {
    mask.complement();
    return mask;
  }
  while (mask.none()) {
    for (auto& w : mask.words()) w = rng.next_u64();
    mask.clear_padding();
  }
  return mask;
}

void vanish_from_header(coding::Packet& p, std::uint32_t target) {
  if (auto* d = std::get_if<coding::DenseHeader>(&p.header)) {
    d->r.set(target, false);
  } else if (auto* l = std::get_if<coding::IndexListHeader>(&p.header)) {
    std::erase(l->indices, target);
  } else {
    throw UsageError("vanishing-symbol attack cannot edit seed headers");
  }
}

void validate(const AdversarySpec& spec) {
  if (spec.knowledge == Knowledge::kOnline && spec.bound.denominator() >= (std::uint64_t{1} << 32)) {
    throw UsageError("c denominator too large");
  }
}

}  // namespace

CBound::CBound(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0 || numerator == 0) throw UsageError("c must be a positive rational");
  const auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
  if (den_ > kMaxDenominator) throw UsageError("c denominator too large");
  if (3 * num_ > den_) throw UsageError("c must not exceed 1/3, got " + to_string());
}

CBound CBound::parse(std::string_view text) {
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw UsageError("cannot parse c bound '" + std::string(text) + "'");
    }
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return CBound(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return CBound(parse_u64(text), 1);
  const auto frac = text.substr(dot + 1);
  if (frac.size() > 9) throw UsageError("c bound has too many decimals");
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const auto whole = dot == 0 ? 0 : parse_u64(text.substr(0, dot));
  return CBound(whole * den + (frac.empty() ? 0 : parse_u64(frac)), den);
}

std::size_t CBound::budget(std::size_t i) const noexcept {
  const std::uint64_t n = std::max<std::size_t>(i, 4);
  return static_cast<std::size_t>(n / den_ * num_ + (n % den_) * num_ / den_);
}

std::string CBound::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string_view policy_name(VictimPolicy policy) {
  switch (policy) {
    case VictimPolicy::kArrival: return "arrival";
    case VictimPolicy::kReverse: return "reverse";
    case VictimPolicy::kRandom: return "random";
    case VictimPolicy::kSparsest: return "sparsest";
    case VictimPolicy::kDensest: return "densest";
    case VictimPolicy::kAlignedRandom: return "aligned-random";
    case VictimPolicy::kAlignedUnit: return "aligned-unit";
    case VictimPolicy::kAlignedPair: return "aligned-pair";
  }
  return "?";
}

Delivery<coding::Packet> transmit(std::span<const coding::Packet> stream, const AdversarySpec& spec, Rng& rng) {
  validate(spec);
  StreamView view;
  view.k = stream.empty() ? 0 : stream.front().k;
  for (const auto& p : stream) view.support.push_back(coding::expand_header(p));
  view.eligible = eligibility(view, spec.strategy);

  Delivery<coding::Packet> out{{stream.begin(), stream.end()}, choose_victims(view, spec, rng)};
  for (std::size_t i = 0; i < out.packets.size(); ++i) {
    if (!out.corrupted[i]) continue;
    auto& p = out.packets[i];
    if (const auto* flip = std::get_if<PayloadFlip>(&spec.strategy)) {
      p.payload ^= flip_mask(p.m(), flip->mask, rng);
    } else if (const auto* v = std::get_if<VanishingSymbol>(&spec.strategy)) {
      vanish_from_header(p, v->target);
    } else {
      p.payload.complement();
    }
  }
  return out;
}

Delivery<lt::LtPacket> transmit(std::span<const lt::LtPacket> stream, const AdversarySpec& spec, Rng& rng) {
  validate(spec);
  StreamView view;
  for (const auto& p : stream) {
    if (!p.neighbors.empty()) view.k = std::max<std::size_t>(view.k, p.neighbors.back() + 1);
  }
  for (const auto& p : stream) view.support.push_back(BitVector::from_indices(view.k, p.neighbors));
  view.eligible = eligibility(view, spec.strategy);

  Delivery<lt::LtPacket> out{{stream.begin(), stream.end()}, choose_victims(view, spec, rng)};
  for (std::size_t i = 0; i < out.packets.size(); ++i) {
    if (!out.corrupted[i]) continue;
    auto& p = out.packets[i];
    if (const auto* flip = std::get_if<PayloadFlip>(&spec.strategy)) {
      p.value ^= flip_mask(p.value.size(), flip->mask, rng);
    } else if (const auto* v = std::get_if<VanishingSymbol>(&spec.strategy)) {
      std::erase(p.neighbors, v->target);
    } else {
      p.value.complement();
    }
  }
  return out;
}

bool satisfies_bound(std::span<const std::uint8_t> corrupted, const CBound& bound, BoundReading reading) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < corrupted.size(); ++i) {
    count += corrupted[i] ? 1 : 0;
    if (reading == BoundReading::kPrefix && count > bound.budget(i + 1)) return false;
  }
  return count <= bound.budget(corrupted.size());
}

}  // namespace crfc::adversary
