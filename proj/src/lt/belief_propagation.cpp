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

#include "crfc/lt/belief_propagation.hpp"

#include <deque>

#include "crfc/errors.hpp"

namespace crfc::lt {

PeelingGraph::PeelingGraph(std::span<const LtPacket> packets, std::size_t symbols)
    : packets_of_symbol_(symbols), resolved_(symbols) {
  neighbors_.reserve(packets.size());
  values_.reserve(packets.size());
  degree_.reserve(packets.size());
  for (std::size_t a = 0; a < packets.size(); ++a) {
    for (const auto s : packets[a].neighbors) {
      if (s >= symbols) throw UsageError("packet neighbor " + std::to_string(s) + " out of range");
      packets_of_symbol_[s].push_back(static_cast<std::uint32_t>(a));
    }
    neighbors_.push_back(packets[a].neighbors);
    values_.push_back(packets[a].value);
    degree_.push_back(packets[a].neighbors.size());
  }
}

std::vector<std::uint32_t> PeelingGraph::current_neighbors(std::size_t packet) const {
  std::vector<std::uint32_t> out;
  for (const auto s : neighbors_[packet]) {
    if (!resolved_[s]) out.push_back(s);
  }
  return out;
}

class PeelingDecoder {
 public:
  static BpResult run(PeelingGraph& g, const BpObserver& observer) {
    BpResult result;
    std::deque<std::size_t> ready;
    for (std::size_t a = 0; a < g.packet_count(); ++a) {
      if (g.degree_[a] == 1) {
        ready.push_back(a);
      } else if (g.degree_[a] == 0 && g.values_[a].any()) {
        result.inconsistencies.push_back({a, kNoSymbol});
      }
    }

    while (!ready.empty()) {
      const auto a = ready.front();
      ready.pop_front();
      if (g.degree_[a] != 1) continue;  // its last neighbor was resolved elsewhere

      std::uint32_t s = kNoSymbol;
      for (const auto candidate : g.neighbors_[a]) {
        if (!g.resolved_[candidate]) {
          s = candidate;
          break;
        }
      }
      g.resolved_[s] = g.values_[a];
      result.decode_order.push_back(s);
      const BitVector value = *g.resolved_[s];

      for (const auto b : g.packets_of_symbol_[s]) {
        g.values_[b] ^= value;
        if (--g.degree_[b] == 1) {
          ready.push_back(b);
        } else if (g.degree_[b] == 0 && g.values_[b].any()) {
          result.inconsistencies.push_back({b, s});
        }
      }
      if (observer) observer(g, s);
    }

    result.symbols = g.resolved_;
    for (std::uint32_t s = 0; s < g.symbol_count(); ++s) {
      if (!g.resolved_[s]) result.unresolved.push_back(s);
    }
    result.complete = result.unresolved.empty();
    for (std::size_t a = 0; a < g.packet_count(); ++a) {
      if (g.degree_[a] > 0) result.residual.push_back(LtPacket{g.current_neighbors(a), g.values_[a]});
    }
    return result;
  }
};

BpResult bp_decode(std::span<const LtPacket> packets, std::size_t symbols, const BpObserver& observer) {
  PeelingGraph graph(packets, symbols);
  return PeelingDecoder::run(graph, observer);
}

}  // namespace crfc::lt
