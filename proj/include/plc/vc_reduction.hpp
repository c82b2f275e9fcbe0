#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plc/core.hpp"
#include "plc/duality.hpp"
#include "plc/errors.hpp"
#include "plc/geometry.hpp"
#include "plc/random.hpp"

namespace plc {

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
/// sorted lexicographically, without duplicates.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct VcInstance {
  Graph graph;
  int k = 0;
};

inline void normalize_edges(Graph& g) {
  for (auto& [u, v] : g.edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

/// Two copies v0 = v and v1 = v + n of every vertex; each edge {u,v} becomes
/// the four edges {u_i, v_j}.
inline Graph double_graph(const Graph& g) {
  Graph out;
  out.n = 2 * g.n;
  out.edges.reserve(4 * g.edges.size());
  for (const auto& [u, v] : g.edges) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        int a = u + i * g.n;
        int b = v + j * g.n;
        if (a > b) std::swap(a, b);
        out.edges.emplace_back(a, b);
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

inline constexpr int vc_brute_force_vertex_cap = 16;

/// Exhaustive vertex-cover decision over all subsets; n <= 16.
inline bool vc_brute_force(const VcInstance& inst) {
  const int n = inst.graph.n;
  if (n > vc_brute_force_vertex_cap)
    throw cap_exceeded("vc_brute_force: more than 16 vertices");
  if (inst.k < 0) return false;
  std::vector<uint32_t> edge_masks;
  edge_masks.reserve(inst.graph.edges.size());
  for (const auto& [u, v] : inst.graph.edges)
    edge_masks.push_back((uint32_t{1} << u) | (uint32_t{1} << v));
  const uint32_t full = (uint32_t{1} << n) - 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) > inst.k) continue;
    bool covers = true;
    for (const uint32_t em : edge_masks) {
      if ((mask & em) == 0) {
        covers = false;
        break;
      }
    }
    if (covers) return true;
  }
  return false;
}

inline constexpr uint64_t default_reduction_seed = 1729;
inline constexpr int verify_special_cap = 12;

namespace detail {

/// From-scratch check of the special position properties:
/// pairwise distinct x-coordinates, no three points collinear, no two
/// connecting lines parallel, and no three connecting lines meeting in a
/// common point outside the set.
inline bool special_properties_hold(std::span<const Point> pts) {
  const int t = static_cast<int>(pts.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (pts[i].x == pts[j].x) return false;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      for (int l = j + 1; l < t; ++l)
        if (orientation(pts[i], pts[j], pts[l]) == Orientation::collinear)
          return false;
  std::vector<Line> lines;
  lines.reserve(t * (t - 1) / 2);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) lines.push_back(line_through(pts[i], pts[j]));
  const int m = static_cast<int>(lines.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (lines[i].a() * lines[j].b() == lines[j].a() * lines[i].b())
        return false;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto q = intersect(lines[i], lines[j]);
      if (!q) continue;
      if (std::find(pts.begin(), pts.end(), *q) != pts.end()) continue;
      for (int l = j + 1; l < m; ++l)
        if (on_line(*q, lines[l])) return false;
    }
  }
  return true;
}

inline std::vector<Point> build_special_point_set(int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Int side = 1;
  for (int i = 0; i < 6; ++i) side *= m;
  std::vector<Point> pts;
  pts.reserve(m);
  while (static_cast<int>(pts.size()) < m) {
    Point cand{Rational(uniform_below(rng, side)),
               Rational(uniform_below(rng, side))};
    pts.push_back(std::move(cand));
    if (!special_properties_hold(pts)) pts.pop_back();
  }
  return pts;
}

inline const std::vector<Point>& special_point_set_cached(int m,
                                                          uint64_t seed) {
  static std::mutex mu;
  static std::map<std::pair<int, uint64_t>, std::vector<Point>> cache;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace({m, seed});
  if (inserted) it->second = build_special_point_set(m, seed);
  return it->second;
}

}  // namespace detail

/// m grid points in special position, coordinates in [0, m^6). Deterministic
/// for a fixed seed: candidates are drawn from a seeded mt19937_64 and the
/// first one keeping all properties intact is kept.
inline std::vector<Point> special_point_set(
    int m, uint64_t seed = default_reduction_seed) {
  if (m < 0) throw std::invalid_argument("special_point_set: negative size");
  if (m == 0) return {};
  return detail::special_point_set_cached(m, seed);
}

/// Checks the special position properties for an arbitrary point set;
/// quadratically many connecting lines make this expensive, hence the cap.
inline bool verify_special_properties(std::span<const Point> pts) {
  if (static_cast<int>(pts.size()) > verify_special_cap)
    throw cap_exceeded("verify_special_properties: more than 12 points");
  return detail::special_properties_hold(pts);
}

/// Vertex cover to line point cover: place the doubled graph's vertices in
/// special position and emit the connecting line of every edge. Budget
/// doubles along with the graph.
inline LpcInstance vc_to_lpc(const VcInstance& inst,
                             uint64_t seed = default_reduction_seed) {
  const Graph doubled = double_graph(inst.graph);
  LpcInstance out;
  out.k = 2 * inst.k;
  if (doubled.edges.empty()) return out;
  const std::vector<Point> pts = special_point_set(doubled.n, seed);
  out.lines.reserve(doubled.edges.size());
  for (const auto& [u, v] : doubled.edges) {
    const Line l = line_through(pts[u], pts[v]);
    // distinct x-coordinates keep every connecting line non-vertical
    const Rational denom(l.b());
    out.lines.push_back({Rational(-l.a()) / denom, Rational(-l.c()) / denom});
  }
  return out;
}

/// Composition with line/point duality: ends at a point line cover instance.
inline PlcInstance vc_to_plc(const VcInstance& inst,
                             uint64_t seed = default_reduction_seed) {
  return dualize_lpc(vc_to_lpc(inst, seed));
}

}  // namespace plc
