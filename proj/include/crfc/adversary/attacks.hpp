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
#include <span>
#include <vector>

#include "crfc/adversary/channel.hpp"
#include "crfc/lt/lt_codec.hpp"

namespace crfc::adversary {

struct VanishResult {
  std::vector<lt::LtPacket> packets;
  std::size_t edited = 0;
  std::size_t dropped = 0;  // packets left with no neighbors
};

VanishResult vanishing_symbol_attack(std::span<const lt::LtPacket> packets, std::uint32_t target);

std::vector<lt::LtPacket> odd_packets_attack(std::span<const lt::LtPacket> packets);

struct Feasibility {
  bool feasible = false;
  std::size_t required = 0;
  std::size_t budget = 0;
};

// Whether the packets `strategy` has to touch fit the c-budget of the stream.
Feasibility attack_feasible(std::span<const lt::LtPacket> stream, const AttackStrategy& strategy,
                            const CBound& bound, BoundReading reading = BoundReading::kFinalSet);

}  // namespace crfc::adversary
