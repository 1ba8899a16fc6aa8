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

#include "crfc/coding/packet.hpp"

namespace crfc::coding {

/// Frame layout (all integers little-endian):
///
///   offset  size  field
///   0       2     magic 0xFC0D (bytes 0x0D 0xFC)
///   2       1     version 0x01
///   3       1     header kind: 0 dense, 1 index list, 2 seed
///   4       4     k
///   8       4     m
///   12      ...   header body
///                   dense:      ceil(k / 8) bytes, r LSB-first
///                   index list: 2-byte count, then count 4-byte indices ascending
///                   seed:       8-byte seed, 4-byte numerator, 4-byte denominator
///   ...     ...   payload, ceil(m / 8) bytes LSB-first
///
/// Unused high bits of the last dense/payload byte must be zero.
inline constexpr std::uint16_t kPacketMagic = 0xFC0D;
inline constexpr std::uint8_t kPacketVersion = 0x01;

std::vector<std::uint8_t> serialize_packet(const Packet& packet);
void append_packet(const Packet& packet, std::vector<std::uint8_t>& out);

/// Parse one frame starting at `offset`; on success `offset` points past it.
/// Throws MalformedPacket carrying the offending byte position.
Packet read_packet(std::span<const std::uint8_t> bytes, std::size_t& offset);

/// Parse exactly one frame; trailing bytes are an error.
Packet deserialize_packet(std::span<const std::uint8_t> bytes);

/// A packet file is frames back to back.
std::vector<std::uint8_t> serialize_packets(std::span<const Packet> packets);
std::vector<Packet> deserialize_packets(std::span<const std::uint8_t> bytes);

}  // namespace crfc::coding
