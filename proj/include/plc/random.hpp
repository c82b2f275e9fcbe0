#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "plc/rational.hpp"

namespace plc {

/// Unbiased draw from [0, bound) using masked rejection. mt19937_64 output
/// is pinned by the standard, so sequences reproduce everywhere; the library
/// distributions do not promise that.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const uint64_t r = rng() & mask;
    if (r < bound) return r;
  }
}

/// Same, for arbitrary-precision bounds: draw 64-bit words, mask the top one.
inline Int uniform_below(std::mt19937_64& rng, const Int& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: nonpositive bound");
  if (bound <= UINT64_MAX) {
    return Int(uniform_below(rng, static_cast<uint64_t>(bound)));
  }
  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  const uint64_t top_mask =
      top_bits >= 64 ? ~uint64_t{0} : ((uint64_t{1} << top_bits) - 1);
  for (;;) {
    Int r = 0;
    for (unsigned w = 0; w < words; ++w) {
      uint64_t word = rng();
      if (w == 0) word &= top_mask;
      r <<= 64;
      r += word;
    }
    if (r < bound) return r;
  }
}

}  // namespace plc
