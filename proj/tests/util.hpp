#pragma once

#include <random>
#include <set>
#include <vector>

#include "plc/geometry.hpp"
#include "plc/random.hpp"

namespace testutil {

inline plc::Rational small_rational(std::mt19937_64& rng, long long span = 6,
                                    uint64_t max_den = 4) {
  const long long num =
      static_cast<long long>(plc::uniform_below(rng, 2 * span + 1)) - span;
  const long long den = 1 + static_cast<long long>(plc::uniform_below(rng, max_den));
  return plc::Rational(plc::Int(num), plc::Int(den));
}

inline plc::Point rational_point(std::mt19937_64& rng, long long span = 6,
                                 uint64_t max_den = 4) {
  return {small_rational(rng, span, max_den), small_rational(rng, span, max_den)};
}

/// n distinct points with integer coordinates in [0, range)^2.
inline std::vector<plc::Point> distinct_grid_points(std::mt19937_64& rng, int n,
                                                    uint64_t range) {
  std::set<plc::Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    pts.insert({plc::Rational(plc::Int(plc::uniform_below(rng, range))),
                plc::Rational(plc::Int(plc::uniform_below(rng, range)))});
  }
  return {pts.begin(), pts.end()};
}

/// n distinct points with small rational coordinates.
inline std::vector<plc::Point> distinct_rational_points(std::mt19937_64& rng,
                                                        int n,
                                                        long long span = 6,
                                                        uint64_t max_den = 4) {
  std::set<plc::Point> pts;
  while (static_cast<int>(pts.size()) < n)
    pts.insert(rational_point(rng, span, max_den));
  return {pts.begin(), pts.end()};
}

}  // namespace testutil
