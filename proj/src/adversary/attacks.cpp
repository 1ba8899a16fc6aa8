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

#include "crfc/adversary/attacks.hpp"

#include <algorithm>

namespace crfc::adversary {

VanishResult vanishing_symbol_attack(std::span<const lt::LtPacket> packets, std::uint32_t target) {
  VanishResult out;
  out.packets.reserve(packets.size());
  for (const auto& p : packets) {
    if (!p.contains(target)) {
      out.packets.push_back(p);
      continue;
    }
    ++out.edited;
    if (p.degree() == 1) {
      ++out.dropped;
      continue;
    }
    auto edited = p;
    std::erase(edited.neighbors, target);
    out.packets.push_back(std::move(edited));
  }
  return out;
}

std::vector<lt::LtPacket> odd_packets_attack(std::span<const lt::LtPacket> packets) {
  std::vector<lt::LtPacket> out(packets.begin(), packets.end());
  for (auto& p : out) {
    if (p.degree() % 2 == 1) p.value.complement();
  }
  return out;
}

Feasibility attack_feasible(std::span<const lt::LtPacket> stream, const AttackStrategy& strategy,
                            const CBound& bound, BoundReading reading) {
  std::vector<std::uint8_t> needed(stream.size(), 0);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (const auto* v = std::get_if<VanishingSymbol>(&strategy)) {
      needed[i] = stream[i].contains(v->target);
    } else if (std::holds_alternative<OddPackets>(strategy)) {
      needed[i] = stream[i].degree() % 2 == 1;
    } else {
      needed[i] = 1;
    }
  }
  Feasibility f;
  f.required = static_cast<std::size_t>(std::count(needed.begin(), needed.end(), 1));
  f.budget = bound.budget(stream.size());
  f.feasible = satisfies_bound(needed, bound, reading);
  return f;
}

}  // namespace crfc::adversary
