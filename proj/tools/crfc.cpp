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

// Command-line front end: encode, decode, attack, experiment.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>

#include "crfc/adversary/channel.hpp"
#include "crfc/coding/encoder.hpp"
#include "crfc/coding/wire.hpp"
#include "crfc/decoders/decoders.hpp"
#include "crfc/errors.hpp"
#include "crfc/experiments/experiments.hpp"
#include "crfc/lt/belief_propagation.hpp"

namespace {

using namespace crfc;

constexpr int kExitOk = 0;
constexpr int kExitDecodeFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMalformed = 3;

class MalformedFile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::string layout_path(const std::string& packets) { return packets + ".layout.json"; }

void write_layout(const std::string& packets, const coding::MessageLayout& layout) {
  nlohmann::json j{{"n", layout.n}, {"m", layout.m}, {"k", layout.k}, {"padding", layout.padding}};
  std::ofstream out(layout_path(packets));
  if (!out) throw UsageError("cannot write " + layout_path(packets));
  out << j.dump(2) << '\n';
}

std::optional<coding::MessageLayout> read_layout(const std::string& packets) {
  const auto path = layout_path(packets);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  try {
    const auto j = nlohmann::json::parse(in);
    coding::MessageLayout l;
    l.n = j.at("n").get<std::size_t>();
    l.m = j.at("m").get<std::size_t>();
    l.k = j.at("k").get<std::size_t>();
    l.padding = j.at("padding").get<std::size_t>();
    if (l.m * l.k != l.n + l.padding) throw MalformedFile("inconsistent layout in " + path);
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedFile("bad layout file " + path + ": " + e.what());
  }
}

std::vector<coding::Packet> read_packets(const std::string& path) {
  const auto bytes = read_file(path);
  auto packets = coding::deserialize_packets(bytes);
  if (packets.empty()) throw MalformedFile(path + " holds no packets");
  return packets;
}

// ---- encode ----

struct EncodeArgs {
  std::string input;
  std::size_t blocks = 1;
  std::string dist = "uniform";
  double delta = 1.0;
  std::string header = "dense";
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::string out;
};

coding::HeaderForm parse_header(const std::string& s) {
  if (s == "dense") return coding::HeaderForm::kDense;
  if (s == "indices") return coding::HeaderForm::kIndexList;
  if (s == "seed") return coding::HeaderForm::kSeed;
  throw UsageError("header must be dense, indices or seed");
}

int run_encode(const EncodeArgs& a) {
  const auto bits = coding::bits_from_bytes(read_file(a.input));
  auto message = coding::split_message(bits, a.blocks);
  const auto layout = message.layout;
  const auto dist = a.dist == "uniform" ? coding::CodingDistribution::uniform()
                    : a.dist == "log"   ? coding::CodingDistribution::log_sparse(layout.k, a.delta)
                                        : throw UsageError("dist must be uniform or log");
  coding::Encoder encoder(std::move(message), dist, parse_header(a.header), a.seed);
  const auto count = a.count ? a.count : 2 * layout.k;
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < count; ++i) coding::append_packet(encoder.next(), out);
  write_file(a.out, out);
  write_layout(a.out, layout);
  std::cout << "wrote " << count << " packets (k=" << layout.k << ", m=" << layout.m << ") to " << a.out << '\n';
  return kExitOk;
}

// ---- decode ----

struct DecodeArgs {
  std::string packets;
  std::string algo = "exhaustive";
  std::size_t k = 0;
  std::size_t f = 0;
  std::size_t epsilon = 4;
  std::optional<double> b;
  std::uint64_t seed = 1;
  std::string acceptance = "all-but-f";
  std::string out;
};

std::optional<std::vector<gf2::BitVector>> bp_blocks(std::span<const coding::Packet> packets, std::size_t k,
                                                     std::size_t m) {
  // Column j of the blocks is LT symbol j; a packet is the xor of the columns
  // its coding vector selects.
  std::vector<lt::LtPacket> lt_packets;
  for (const auto& p : packets) {
    auto r = coding::expand_header(p);
    if (r.none()) continue;
    lt_packets.push_back({r.ones(), p.payload});
  }
  const auto result = lt::bp_decode(lt_packets, k);
  if (!result.complete) {
    std::cerr << "bp stalled with " << result.unresolved.size() << " of " << k << " columns unresolved\n";
    return std::nullopt;
  }
  std::vector<gf2::BitVector> blocks(m, gf2::BitVector(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < m; ++l) blocks[l].set(j, result.symbols[j]->get(l));
  }
  return blocks;
}

int run_decode(const DecodeArgs& a) {
  const auto packets = read_packets(a.packets);
  const auto layout = read_layout(a.packets);
  const std::size_t k = packets.front().k;
  const std::size_t m = packets.front().m();
  if (a.k && a.k != k) throw UsageError("--k " + std::to_string(a.k) + " does not match packets (k=" + std::to_string(k) + ")");
  if (layout && (layout->k != k || layout->m != m)) throw MalformedFile("layout sidecar disagrees with packets");

  std::optional<std::vector<gf2::BitVector>> blocks;
  if (a.algo == "bp") {
    blocks = bp_blocks(packets, k, m);
  } else {
    const auto algorithm = experiments::parse_algorithm(a.algo);
    auto plan = a.b ? decoders::plan_selective(k, *a.b) : decoders::plan_uniform(k, a.f, a.epsilon);
    if (a.b) plan.epsilon = a.epsilon;
    decoders::DecodeAllOptions options;
    options.acceptance = experiments::parse_acceptance(a.acceptance);
    Rng rng(a.seed);
    const auto input = decoders::DecodeInput::from_packets(packets);
    if (input.packets() < plan.required_packets) {
      std::cerr << "warning: " << input.packets() << " packets, plan asks for " << plan.required_packets << '\n';
    }
    const auto out = decoders::decode_all_blocks(input, plan, algorithm, rng, options);
    if (out.ok()) {
      blocks = out.values();
    } else {
      std::cerr << "decode failed: " << decoders::outcome_name(out.first_failure()) << '\n';
    }
  }
  if (!blocks) return kExitDecodeFailure;

  std::vector<std::uint8_t> bytes;
  if (layout) {
    bytes = coding::bytes_from_bits(coding::join_message(*blocks, *layout));
  } else {
    coding::MessageLayout raw{k * m, m, k, 0};
    bytes = coding::bytes_from_bits(coding::join_message(*blocks, raw));
  }
  write_file(a.out, bytes);
  std::cout << "decoded " << m << " block(s) of " << k << " bits to " << a.out << '\n';
  return kExitOk;
}

// ---- attack ----

struct AttackArgs {
  std::string packets;
  std::string strategy = "flip";
  std::string c = "1/5";
  std::string adversary = "uniform:offline";
  std::string policy = "arrival";
  std::string reading = "prefix";
  std::string mask = "complement";
  std::uint32_t target = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_attack(const AttackArgs& a) {
  const auto packets = read_packets(a.packets);
  adversary::AdversarySpec spec;
  experiments::parse_adversary_kind(a.adversary, spec.selection, spec.knowledge);
  spec.bound = adversary::CBound::parse(a.c);
  spec.policy = experiments::parse_policy(a.policy);
  spec.reading = experiments::parse_reading(a.reading);
  if (a.strategy == "flip") {
    spec.strategy = adversary::PayloadFlip{experiments::parse_mask(a.mask)};
  } else if (a.strategy == "vanish") {
    spec.strategy = adversary::VanishingSymbol{a.target};
  } else if (a.strategy == "odd") {
    spec.strategy = adversary::OddPackets{};
  } else {
    throw UsageError("strategy must be flip, vanish or odd");
  }
  Rng rng(a.seed);
  const auto delivered = adversary::transmit(packets, spec, rng);
  write_file(a.out, coding::serialize_packets(delivered.packets));
  if (const auto layout = read_layout(a.packets)) write_layout(a.out, *layout);
  std::cout << "corrupted " << delivered.corrupted_count() << " of " << packets.size() << " packets (c=" << spec.bound.to_string()
            << ")\n";
  return kExitOk;
}

// ---- experiment ----

struct ExperimentArgs {
  std::string kind;
  std::string config;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> threads;
  std::string out = "results";
};

int run_experiment_cmd(const ExperimentArgs& a) {
  auto config = experiments::Config::load(a.config);
  if (a.trials) config.set("trials", {std::to_string(*a.trials)});
  if (a.seed) config.set("seed", {std::to_string(*a.seed)});
  if (a.threads) config.set("threads", {std::to_string(*a.threads)});
  const auto result = experiments::run_experiment(a.kind, config);
  experiments::write_results(result, a.out);
  std::cout << "wrote " << result.records.size() << " trial rows to " << (std::filesystem::path(a.out) / result.experiment).string()
            << ".csv\n";
  for (const auto& cell : result.summary["cells"]) {
    std::cout << "  " << cell["cell"].get<std::string>() << ": " << cell["successes"] << "/" << cell["trials"] << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corruption-resilient fountain code toolkit"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Encode a file into packets");
  encode->add_option("--input", enc.input, "Message file")->required();
  encode->add_option("--blocks", enc.blocks, "Number of blocks m")->required();
  encode->add_option("--dist", enc.dist, "Coding-vector distribution")->check(CLI::IsMember({"uniform", "log"}));
  encode->add_option("--delta", enc.delta, "Log distribution slack");
  encode->add_option("--header", enc.header, "Header form")->check(CLI::IsMember({"dense", "indices", "seed"}));
  encode->add_option("--count", enc.count, "Packets to emit (default 2k)");
  encode->add_option("--seed", enc.seed, "Encoder seed");
  encode->add_option("--out", enc.out, "Packet file")->required();

  DecodeArgs dec;
  auto* decode = app.add_subcommand("decode", "Decode a packet file");
  decode->add_option("--packets", dec.packets, "Packet file")->required();
  decode->add_option("--algo", dec.algo, "Decoder")
      ->check(CLI::IsMember({"bp", "majority", "exhaustive", "randomized"}));
  decode->add_option("--k", dec.k, "Expected block length");
  decode->add_option("--f", dec.f, "Corrupted packets to tolerate");
  decode->add_option("--epsilon", dec.epsilon, "Independence slack");
  decode->add_option("--b", dec.b, "Selective model: corruption ratio b (plans a)");
  decode->add_option("--acceptance", dec.acceptance, "all-but-f or fixed")
      ->check(CLI::IsMember({"all-but-f", "fixed"}));
  decode->add_option("--seed", dec.seed, "Decoder seed");
  decode->add_option("--out", dec.out, "Output file")->required();

  AttackArgs atk;
  auto* attack = app.add_subcommand("attack", "Corrupt a packet file");
  attack->add_option("--packets", atk.packets, "Packet file")->required();
  attack->add_option("--strategy", atk.strategy, "Attack")->check(CLI::IsMember({"flip", "vanish", "odd"}));
  attack->add_option("--c", atk.c, "Corruption bound p/q, at most 1/3");
  attack->add_option("--adversary", atk.adversary, "{uniform|selective}:{online|offline}");
  attack->add_option("--policy", atk.policy, "Selective victim policy");
  attack->add_option("--reading", atk.reading, "prefix or final-set");
  attack->add_option("--mask", atk.mask, "complement or random");
  attack->add_option("--target", atk.target, "Vanishing-symbol target index");
  attack->add_option("--seed", atk.seed, "Adversary seed");
  attack->add_option("--out", atk.out, "Output packet file")->required();

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  experiment->add_option("kind", exp.kind, "rank, attack, decoder or shared-value")
      ->required()
      ->check(CLI::IsMember({"rank", "attack", "decoder", "shared-value"}));
  experiment->add_option("--config", exp.config, "Config file")->required();
  experiment->add_option("--trials", exp.trials, "Override trials");
  experiment->add_option("--seed", exp.seed, "Override master seed");
  experiment->add_option("--threads", exp.threads, "Worker threads (0 = all cores)");
  experiment->add_option("--out", exp.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode->parsed()) return run_encode(enc);
    if (decode->parsed()) return run_decode(dec);
    if (attack->parsed()) return run_attack(atk);
    return run_experiment_cmd(exp);
  } catch (const MalformedPacket& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const MalformedFile& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
