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

#include "crfc/coding/wire.hpp"

#include <limits>

#include "crfc/errors.hpp"

namespace crfc::coding {
namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

void put_bits(std::vector<std::uint8_t>& out, const BitVector& bits) {
  const auto words = bits.words();
  const auto nbytes = (bits.size() + 7) / 8;
  for (std::size_t i = 0; i < nbytes; ++i) out.push_back(static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8))));
}

class Reader {
 public:
  Reader(std::span<const std::uint8_t> bytes, std::size_t offset) : bytes_(bytes), pos_(offset) {}

  std::size_t pos() const { return pos_; }

  void need(std::size_t n, const char* what) const {
    if (bytes_.size() - pos_ < n) throw MalformedPacket(std::string("truncated frame: missing ") + what, pos_);
  }

  template <typename T>
  T le(const char* what) {
    need(sizeof(T), what);
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(static_cast<T>(bytes_[pos_ + i]) << (8 * i));
    pos_ += sizeof(T);
    return value;
  }

  BitVector bits(std::size_t len, const char* what) {
    const auto nbytes = (len + 7) / 8;
    need(nbytes, what);
    BitVector out(len);
    auto words = out.words();
    for (std::size_t i = 0; i < nbytes; ++i) {
      words[i / 8] |= static_cast<BitVector::Word>(bytes_[pos_ + i]) << (8 * (i % 8));
    }
    if (len % 8 != 0 && (bytes_[pos_ + nbytes - 1] >> (len % 8)) != 0) {
      throw MalformedPacket(std::string("nonzero padding bits in ") + what, pos_ + nbytes - 1);
    }
    pos_ += nbytes;
    return out;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
};

}  // namespace

void append_packet(const Packet& packet, std::vector<std::uint8_t>& out) {
  if (packet.k == 0 || packet.payload.empty()) throw UsageError("packet must have k >= 1 and m >= 1");
  if (packet.payload.size() > std::numeric_limits<std::uint32_t>::max()) throw UsageError("payload too wide");
  put_le<std::uint16_t>(out, kPacketMagic);
  out.push_back(kPacketVersion);
  out.push_back(static_cast<std::uint8_t>(packet.form()));
  put_le<std::uint32_t>(out, packet.k);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(packet.payload.size()));
  if (const auto* dense = std::get_if<DenseHeader>(&packet.header)) {
    if (dense->r.size() != packet.k) throw UsageError("dense header length differs from k");
    put_bits(out, dense->r);
  } else if (const auto* list = std::get_if<IndexListHeader>(&packet.header)) {
    if (list->indices.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw UsageError("index list longer than 65535 entries; use a dense header");
    }
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(list->indices.size()));
    for (const auto idx : list->indices) put_le<std::uint32_t>(out, idx);
  } else {
    const auto& seed = std::get<SeedHeader>(packet.header);
    put_le<std::uint64_t>(out, seed.seed);
    put_le<std::uint32_t>(out, seed.numerator);
    put_le<std::uint32_t>(out, seed.denominator);
  }
  put_bits(out, packet.payload);
}

std::vector<std::uint8_t> serialize_packet(const Packet& packet) {
  std::vector<std::uint8_t> out;
  append_packet(packet, out);
  return out;
}

Packet read_packet(std::span<const std::uint8_t> bytes, std::size_t& offset) {
  Reader in(bytes, offset);
  const auto start = in.pos();
  if (in.le<std::uint16_t>("magic") != kPacketMagic) throw MalformedPacket("bad magic", start);
  if (in.le<std::uint8_t>("version") != kPacketVersion) throw MalformedPacket("unsupported version", start + 2);
  const auto kind = in.le<std::uint8_t>("header kind");
  if (kind > 2) throw MalformedPacket("unknown header kind " + std::to_string(kind), start + 3);
  Packet p;
  p.k = in.le<std::uint32_t>("k");
  if (p.k == 0) throw MalformedPacket("k must be at least 1", start + 4);
  const auto m = in.le<std::uint32_t>("m");
  if (m == 0) throw MalformedPacket("m must be at least 1", start + 8);

  const auto body = in.pos();
  switch (static_cast<HeaderForm>(kind)) {
    case HeaderForm::kDense:
      p.header = DenseHeader{in.bits(p.k, "dense header")};
      break;
    case HeaderForm::kIndexList: {
      const auto count = in.le<std::uint16_t>("index count");
      IndexListHeader h;
      h.indices.reserve(count);
      for (std::uint16_t i = 0; i < count; ++i) {
        const auto at = in.pos();
        const auto idx = in.le<std::uint32_t>("index");
        if (idx >= p.k) throw MalformedPacket("index " + std::to_string(idx) + " >= k", at);
        if (!h.indices.empty() && idx <= h.indices.back()) {
          throw MalformedPacket(idx == h.indices.back() ? "duplicate index" : "indices not ascending", at);
        }
        h.indices.push_back(idx);
      }
      p.header = std::move(h);
      break;
    }
    case HeaderForm::kSeed: {
      SeedHeader h;
      h.seed = in.le<std::uint64_t>("seed");
      h.numerator = in.le<std::uint32_t>("density numerator");
      h.denominator = in.le<std::uint32_t>("density denominator");
      if (h.numerator == 0 || h.numerator >= h.denominator) {
        throw MalformedPacket("seed density outside (0, 1)", body + 8);
      }
      p.header = h;
      break;
    }
  }
  p.payload = in.bits(m, "payload");
  offset = in.pos();
  return p;
}

Packet deserialize_packet(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw MalformedPacket("empty input", 0);
  std::size_t offset = 0;
  auto p = read_packet(bytes, offset);
  if (offset != bytes.size()) throw MalformedPacket("trailing bytes after frame", offset);
  return p;
}

std::vector<std::uint8_t> serialize_packets(std::span<const Packet> packets) {
  std::vector<std::uint8_t> out;
  for (const auto& p : packets) append_packet(p, out);
  return out;
}

std::vector<Packet> deserialize_packets(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw MalformedPacket("empty input", 0);
  std::vector<Packet> out;
  std::size_t offset = 0;
  while (offset < bytes.size()) out.push_back(read_packet(bytes, offset));
  return out;
}

}  // namespace crfc::coding
