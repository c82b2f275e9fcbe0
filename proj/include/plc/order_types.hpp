#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "plc/core.hpp"
#include "plc/errors.hpp"
#include "plc/geometry.hpp"

namespace plc {

/// Orientation signs of all index triples i < j < k in lexicographic order.
/// Comparisons are on the sign values themselves, never on any serialized
/// form (the character codes of '-','0','+' sort differently).
struct Otr {
  int n = 0;
  std::vector<int8_t> signs;

  friend auto operator<=>(const Otr&, const Otr&) = default;
};

inline Otr otr(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  Otr out;
  out.n = n;
  out.signs.reserve(n * (n - 1) * (n - 2) / 6);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        out.signs.push_back(static_cast<int8_t>(
            orientation_value(orientation(pts[i], pts[j], pts[k]))));
  return out;
}

inline constexpr int canonical_otr_point_cap = 8;

/// Minimum otr over all relabelings of the points. Exhaustive over n!
/// orderings; orientation signs are precomputed per ordered triple so each
/// candidate is assembled from table lookups.
inline Otr canonical_otr(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n > canonical_otr_point_cap)
    throw cap_exceeded("canonical_otr: more than 8 points");
  std::vector<int8_t> table(static_cast<size_t>(n) * n * n, 0);
  const auto at = [&](int a, int b, int c) -> int8_t& {
    return table[(static_cast<size_t>(a) * n + b) * n + c];
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto s = static_cast<int8_t>(
            orientation_value(orientation(pts[i], pts[j], pts[k])));
        at(i, j, k) = s;
        at(j, k, i) = s;
        at(k, i, j) = s;
        at(j, i, k) = static_cast<int8_t>(-s);
        at(i, k, j) = static_cast<int8_t>(-s);
        at(k, j, i) = static_cast<int8_t>(-s);
      }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const size_t m = static_cast<size_t>(n) * (n - 1) * (n - 2) / 6;
  std::vector<int8_t> best;
  std::vector<int8_t> cand(m);
  bool first = true;
  do {
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          cand[idx++] = at(perm[i], perm[j], perm[k]);
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Otr out;
  out.n = n;
  out.signs = std::move(best);
  return out;
}

inline bool equivalent(std::span<const Point> a, std::span<const Point> b) {
  if (a.size() != b.size()) return false;
  return canonical_otr(a) == canonical_otr(b);
}

struct CatalogEntry {
  Otr otr;
  std::vector<Point> representative;
};

struct OrderTypeCatalog {
  int n = 0;
  int grid = 0;
  std::vector<CatalogEntry> entries;  // sorted by otr

  const CatalogEntry* find(const Otr& target) const {
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), target,
        [](const CatalogEntry& e, const Otr& o) { return e.otr < o; });
    if (it == entries.end() || !(it->otr == target)) return nullptr;
    return &*it;
  }
};

inline constexpr uint64_t enumerate_work_budget = 50'000'000;

/// All order types realized by n-point subsets of the g x g integer grid.
/// Each subset is canonicalized, so the work is about C(g^2, n) * n!; runs
/// over the budget are rejected up front.
inline OrderTypeCatalog enumerate_grid_order_types(int n, int g) {
  if (g < 1) throw std::invalid_argument("enumerate_grid_order_types: grid side must be positive");
  if (n < 0 || n > g * g)
    throw std::invalid_argument("enumerate_grid_order_types: bad subset size");
  if (n > canonical_otr_point_cap)
    throw cap_exceeded("enumerate_grid_order_types: more than 8 points");
  Int work = 1;
  for (int i = 0; i < n; ++i) work *= g * g - i;  // C(g^2,n) * n!
  if (work > enumerate_work_budget)
    throw budget_exceeded("enumerate_grid_order_types: work budget exceeded");
  std::vector<Point> grid_pts;
  grid_pts.reserve(g * g);
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) grid_pts.push_back({Rational(x), Rational(y)});
  std::map<Otr, std::vector<Point>> seen;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Point> subset(n);
  for (;;) {
    for (int i = 0; i < n; ++i) subset[i] = grid_pts[idx[i]];
    seen.try_emplace(canonical_otr(subset), subset);
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == g * g - n + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
  }
  OrderTypeCatalog catalog;
  catalog.n = n;
  catalog.grid = g;
  catalog.entries.reserve(seen.size());
  for (auto& [key, rep] : seen)
    catalog.entries.push_back({key, std::move(rep)});
  return catalog;
}

}  // namespace plc
