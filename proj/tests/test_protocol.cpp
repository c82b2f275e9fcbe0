#include <random>

#include "catch_amalgamated.hpp"
#include "plc/core.hpp"
#include "plc/io.hpp"
#include "plc/protocol.hpp"
#include "plc/random.hpp"
#include "util.hpp"

using plc::Direction;
using plc::Point;
using plc::ProtocolConfig;
using plc::ProtocolTranscript;
using plc::Rational;

namespace {

Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

uint64_t decode_number(const std::string& bits) {
  size_t ones = 0;
  while (ones < bits.size() && bits[ones] == '1') ++ones;
  REQUIRE(ones + 1 + ones == bits.size());
  REQUIRE(bits[ones] == '0');
  uint64_t value = 0;
  for (size_t i = ones + 1; i < bits.size(); ++i)
    value = 2 * value + (bits[i] == '1' ? 1 : 0);
  return value;
}

}  // namespace

TEST_CASE("bit cost helpers") {
  CHECK(plc::ceil_log2(1) == 0);
  CHECK(plc::ceil_log2(2) == 1);
  CHECK(plc::ceil_log2(3) == 2);
  CHECK(plc::ceil_log2(8) == 3);
  CHECK(plc::ceil_log2(9) == 4);
  CHECK_THROWS_AS(plc::ceil_log2(0), std::invalid_argument);
  CHECK(plc::cost_bound(0, 1) == 0);
  CHECK(plc::cost_bound(1, 1) == 5);
  CHECK(plc::cost_bound(3, 2) == 9);
}

TEST_CASE("empty input needs no communication") {
  const auto tr = plc::run_protocol(std::vector<Point>{}, ProtocolConfig{3});
  CHECK(tr.messages.empty());
  CHECK(tr.alice_cost_bits == 0);
  CHECK(tr.rounds == 0);
  CHECK(tr.answer == 0);
  CHECK(tr.catalog_size == 0);
}

TEST_CASE("single point against a one-entry catalog") {
  const auto tr = plc::run_protocol(std::vector<Point>{pt(1, 0)}, ProtocolConfig{2});
  CHECK(tr.catalog_size == 1);
  CHECK(tr.rounds == 1);
  CHECK(tr.answer == 1);
  CHECK(tr.alice_cost_bits == 5);  // "101" plus one 2-bit reply
  REQUIRE(tr.messages.size() == 4);
  CHECK(tr.messages[0].direction == Direction::alice_to_bob);
  CHECK(tr.messages[0].payload == "101");
  CHECK(tr.messages[1].direction == Direction::bob_to_alice);
  CHECK(tr.messages[2].payload == "00");
  CHECK(tr.messages[3].payload == "1");
}

TEST_CASE("answers are exact minimum covers") {
  const auto flat = plc::run_protocol(
      std::vector<Point>{pt(0, 0), pt(1, 1), pt(2, 2)}, ProtocolConfig{3});
  CHECK(flat.answer == 1);
  CHECK(flat.catalog_size == 2);
  const auto tri = plc::run_protocol(
      std::vector<Point>{pt(0, 0), pt(1, 0), pt(0, 1)}, ProtocolConfig{3});
  CHECK(tri.answer == 2);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(plc::uniform_below(rng, 5));
    const auto pts = testutil::distinct_grid_points(rng, n, 3);
    const auto tr = plc::run_protocol(pts, ProtocolConfig{3});
    CHECK(tr.answer == plc::brute_force_min_cover(pts));
    for (int k = 0; k <= 3; ++k)
      CHECK(plc::decide({pts, k}) == (tr.answer <= k));
  }
}

TEST_CASE("cost accounting stays within the bound") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(plc::uniform_below(rng, 5));
    const int g = 3 + static_cast<int>(plc::uniform_below(rng, 2));
    const auto pts = testutil::distinct_grid_points(rng, n, g);
    const auto tr = plc::run_protocol(pts, ProtocolConfig{g});
    CHECK(tr.alice_cost_bits <= plc::cost_bound(n, tr.catalog_size));
    CHECK(tr.rounds <= plc::ceil_log2(tr.catalog_size) + 1);
    uint64_t alice_bits = 0;
    int probes = 0;
    for (const auto& m : tr.messages) {
      if (m.direction == Direction::alice_to_bob) {
        alice_bits += m.bits;
      } else {
        CHECK(m.bits == 0);
        ++probes;
      }
    }
    CHECK(alice_bits == tr.alice_cost_bits);
    CHECK(probes == tr.rounds + 1);  // the final message carries the answer
    CHECK(decode_number(tr.messages[0].payload) == static_cast<uint64_t>(n));
  }
}

TEST_CASE("the located signature is the canonical one") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(plc::uniform_below(rng, 3));
    const auto pts = testutil::distinct_grid_points(rng, n, 4);
    const auto tr = plc::run_protocol(pts, ProtocolConfig{4});
    const std::string want = plc::otr_string(plc::canonical_otr(pts));
    bool located = false;
    for (size_t i = 1; i < tr.messages.size(); ++i) {
      if (tr.messages[i].direction == Direction::alice_to_bob &&
          tr.messages[i].payload == "00") {
        CHECK(tr.messages[i - 1].payload == want);
        located = true;
      }
    }
    CHECK(located);
  }
}

TEST_CASE("transcripts are deterministic") {
  const std::vector<Point> pts{pt(0, 0), pt(2, 1), pt(1, 2), pt(2, 2)};
  const auto a = plc::run_protocol(pts, ProtocolConfig{3});
  const auto b = plc::run_protocol(pts, ProtocolConfig{3});
  REQUIRE(a.messages.size() == b.messages.size());
  for (size_t i = 0; i < a.messages.size(); ++i) {
    CHECK(a.messages[i].direction == b.messages[i].direction);
    CHECK(a.messages[i].payload == b.messages[i].payload);
    CHECK(a.messages[i].bits == b.messages[i].bits);
  }
  CHECK(plc::format_transcript(a) == plc::format_transcript(b));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(plc::run_protocol(std::vector<Point>{pt(5, 5)}, ProtocolConfig{3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(plc::run_protocol(std::vector<Point>{pt(-1, 0)}, ProtocolConfig{3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      plc::run_protocol(std::vector<Point>{pt(0, 0), pt(0, 0)}, ProtocolConfig{3}),
      std::invalid_argument);
  CHECK_THROWS_AS(plc::run_protocol(std::vector<Point>{pt(0, 0)}, ProtocolConfig{1}),
                  std::invalid_argument);
  const Point half{Rational(plc::Int(1), plc::Int(2)), Rational(0)};
  CHECK_THROWS_AS(plc::run_protocol(std::vector<Point>{half}, ProtocolConfig{3}),
                  std::invalid_argument);
}
