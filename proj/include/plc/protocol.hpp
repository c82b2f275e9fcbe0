#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "plc/core.hpp"
#include "plc/errors.hpp"
#include "plc/geometry.hpp"
#include "plc/order_types.hpp"

namespace plc {

struct ProtocolConfig {
  int grid = 2;  // points live on {0..grid-1}^2
};

enum class Direction { alice_to_bob, bob_to_alice };

struct ProtocolMessage {
  Direction direction;
  std::string payload;
  int bits = 0;  // transmission cost; only Alice -> Bob bits are charged
};

struct ProtocolTranscript {
  std::vector<ProtocolMessage> messages;
  uint64_t alice_cost_bits = 0;
  int rounds = 0;
  int answer = 0;  // minimum number of covering lines
  int grid = 0;
  uint64_t catalog_size = 0;
};

namespace detail {

inline int bitlen(uint64_t n) {
  int len = 0;
  while (n > 0) {
    ++len;
    n >>= 1;
  }
  return len;
}

/// Self-delimiting encoding of n >= 1: bitlen(n) ones, a zero, then the
/// binary digits of n. 2*bitlen(n) + 1 bits total.
inline std::string encode_number(uint64_t n) {
  const int len = bitlen(n);
  std::string out(len, '1');
  out.push_back('0');
  for (int i = len - 1; i >= 0; --i)
    out.push_back((n >> i) & 1 ? '1' : '0');
  return out;
}

inline std::string otr_symbols(const Otr& o) {
  std::string out;
  out.reserve(o.signs.size());
  for (const int8_t s : o.signs)
    out.push_back(s < 0 ? '-' : (s > 0 ? '+' : '0'));
  return out;
}

}  // namespace detail

inline int ceil_log2(uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log2: zero");
  int len = 0;
  uint64_t v = 1;
  while (v < n) {
    v <<= 1;
    ++len;
  }
  return len;
}

/// Worst-case number of bits Alice sends for an n-point input against a
/// catalog of the given size.
inline uint64_t cost_bound(uint64_t n, uint64_t catalog_size) {
  if (n == 0) return 0;
  return (2 * detail::bitlen(n) + 1) + 2 * (ceil_log2(catalog_size) + 1);
}

/// One-sided communication game: Alice holds grid points, Bob must announce
/// their minimum line cover size while only Alice -> Bob bits are charged.
/// Alice sends n; Bob enumerates the order types the grid can realize and
/// binary-searches the sorted catalog, with Alice answering each probe by a
/// 2-bit three-way comparison against her canonical signature. Equivalent
/// point sets need equally many covering lines, so the representative's
/// exact cover size is the answer.
inline ProtocolTranscript run_protocol(std::span<const Point> pts,
                                       const ProtocolConfig& config) {
  if (config.grid < 2)
    throw std::invalid_argument("run_protocol: grid side must be at least 2");
  const Rational side{config.grid};
  for (const Point& p : pts) {
    if (!p.x.is_integer() || !p.y.is_integer() || p.x.sign() < 0 ||
        p.y.sign() < 0 || !(p.x < side) || !(p.y < side))
      throw std::invalid_argument("run_protocol: point off the grid");
  }
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("run_protocol: duplicate point");

  ProtocolTranscript tr;
  tr.grid = config.grid;
  const uint64_t n = pts.size();
  if (n == 0) return tr;  // nothing to cover, nothing to send

  tr.messages.push_back({Direction::alice_to_bob, detail::encode_number(n),
                         2 * detail::bitlen(n) + 1});
  const OrderTypeCatalog catalog =
      enumerate_grid_order_types(static_cast<int>(n), config.grid);
  tr.catalog_size = catalog.entries.size();

  const Otr mine = canonical_otr(pts);
  size_t lo = 0;
  size_t hi = catalog.entries.size();
  const CatalogEntry* found = nullptr;
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    const CatalogEntry& probe = catalog.entries[mid];
    tr.messages.push_back(
        {Direction::bob_to_alice, detail::otr_symbols(probe.otr), 0});
    ++tr.rounds;
    if (mine == probe.otr) {
      tr.messages.push_back({Direction::alice_to_bob, "00", 2});
      found = &probe;
      break;
    }
    if (mine < probe.otr) {
      tr.messages.push_back({Direction::alice_to_bob, "01", 2});
      hi = mid;
    } else {
      tr.messages.push_back({Direction::alice_to_bob, "10", 2});
      lo = mid + 1;
    }
  }
  if (!found)
    throw std::logic_error("run_protocol: order type missing from catalog");

  tr.answer = brute_force_min_cover(found->representative);
  tr.messages.push_back(
      {Direction::bob_to_alice, std::to_string(tr.answer), 0});
  for (const ProtocolMessage& m : tr.messages)
    if (m.direction == Direction::alice_to_bob) tr.alice_cost_bits += m.bits;
  return tr;
}

}  // namespace plc
