#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "plc/errors.hpp"
#include "plc/geometry.hpp"

namespace plc {

/// Point Line Cover instance: can the points be covered by at most k lines?
struct PlcInstance {
  std::vector<Point> points;  // pairwise distinct
  int k = 0;
};

inline bool points_distinct(const std::vector<Point>& points) {
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

struct CandidateLine {
  Line line;
  std::vector<int> covered;  // ascending indices into the point sequence
};

/// Every line through at least two of the points, each listed once with its
/// full covered index set, in canonical line order.
inline std::vector<CandidateLine> candidate_lines(const std::vector<Point>& points) {
  std::map<Line, std::vector<int>> groups;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto [it, fresh] = groups.try_emplace(line_through(points[i], points[j]));
      if (fresh) {
        // First pair on this line: collect its full covered set once.
        for (int t = 0; t < n; ++t) {
          if (on_line(points[t], it->first)) it->second.push_back(t);
        }
      }
    }
  }
  std::vector<CandidateLine> result;
  result.reserve(groups.size());
  for (auto& [line, covered] : groups) result.push_back({line, std::move(covered)});
  return result;
}

/// Outcome of exhaustive reduction. When `decided` is empty the reduced
/// instance is equivalent to the input and has at most k^2 points.
struct KernelReport {
  PlcInstance reduced;
  std::vector<Line> mandatory_lines;
  std::optional<bool> decided;
};

/// Applies, to a fixpoint: any line through >= k+1 points is mandatory
/// (remove its points, decrement k); an empty point set is a yes; k = 0 with
/// points left is a no; more than k^2 points with no mandatory line is a no.
inline KernelReport kernelize(const PlcInstance& inst) {
  KernelReport report;
  std::vector<Point> pts = inst.points;
  int k = inst.k;
  for (;;) {
    if (pts.empty()) {
      report.decided = true;
      break;
    }
    if (k <= 0) {
      report.decided = false;
      break;
    }
    const auto cands = candidate_lines(pts);
    const CandidateLine* mandatory = nullptr;
    for (const auto& cand : cands) {
      if (static_cast<int>(cand.covered.size()) >= k + 1) {
        mandatory = &cand;
        break;  // canonical order: first hit wins
      }
    }
    if (mandatory != nullptr) {
      report.mandatory_lines.push_back(mandatory->line);
      std::vector<Point> rest;
      rest.reserve(pts.size() - mandatory->covered.size());
      size_t c = 0;
      for (size_t i = 0; i < pts.size(); ++i) {
        if (c < mandatory->covered.size() &&
            static_cast<size_t>(mandatory->covered[c]) == i) {
          ++c;
        } else {
          rest.push_back(pts[i]);
        }
      }
      pts = std::move(rest);
      --k;
      continue;
    }
    if (pts.size() > static_cast<size_t>(k) * static_cast<size_t>(k)) {
      report.decided = false;
    }
    break;
  }
  report.reduced = PlcInstance{std::move(pts), k};
  return report;
}

inline constexpr int brute_force_point_cap = 14;

namespace detail {

struct CoverSearch {
  std::vector<uint32_t> line_masks;  // each covers >= 2 points
  int best = 0;

  // Least lines any completion of `uncovered` can add: each line grabs at
  // most max_cover of the remaining points.
  int lower_bound(uint32_t uncovered) const {
    const int cnt = __builtin_popcount(uncovered);
    int max_cover = 1;
    for (uint32_t m : line_masks) {
      max_cover = std::max(max_cover, __builtin_popcount(m & uncovered));
    }
    return (cnt + max_cover - 1) / max_cover;
  }

  void run(uint32_t uncovered, int used) {
    if (uncovered == 0) {
      best = std::min(best, used);
      return;
    }
    if (used + lower_bound(uncovered) >= best) return;
    const int p = __builtin_ctz(uncovered);
    for (uint32_t m : line_masks) {
      if ((m >> p) & 1u) {
        if (__builtin_popcount(m & uncovered) >= 2) run(uncovered & ~m, used + 1);
      }
    }
    run(uncovered & ~(uint32_t{1} << p), used + 1);  // a line for p alone
  }
};

}  // namespace detail

/// Exact minimum number of lines covering all points, by exhaustive search
/// over lines through point pairs (a line covering a single point can always
/// be charged separately). Capped at brute_force_point_cap points.
inline int brute_force_min_cover(const std::vector<Point>& points) {
  const int n = static_cast<int>(points.size());
  if (n > brute_force_point_cap) {
    throw cap_exceeded("brute_force_min_cover: more than " +
                       std::to_string(brute_force_point_cap) + " points");
  }
  if (n == 0) return 0;
  detail::CoverSearch search;
  for (const auto& cand : candidate_lines(points)) {
    uint32_t m = 0;
    for (int idx : cand.covered) m |= uint32_t{1} << idx;
    search.line_masks.push_back(m);
  }
  search.best = (n + 1) / 2;  // achievable: pair points up, one leftover line
  search.run((uint32_t{1} << n) - 1, 0);
  return search.best;
}

namespace detail {

inline bool fpt_branch(std::vector<Point> pts, int k);

inline bool fpt_on_kernel(const KernelReport& report) {
  if (report.decided) return *report.decided;
  return fpt_branch(report.reduced.points, report.reduced.k);
}

inline bool fpt_branch(std::vector<Point> pts, int k) {
  const int n = static_cast<int>(pts.size());
  if (2 * k >= n) return true;  // pair the points up, one line each pair
  // Undecided kernels have n >= 1 and k >= 1, so n >= 2 here and the first
  // point shares a line with some other point.
  struct Branch {
    Line line;
    std::vector<int> covered;
  };
  std::vector<Branch> branches;
  for (int j = 1; j < n; ++j) {
    if (pts[j] == pts[0]) continue;
    Line l = line_through(pts[0], pts[j]);
    if (std::any_of(branches.begin(), branches.end(),
                    [&](const Branch& b) { return b.line == l; })) {
      continue;
    }
    Branch b{std::move(l), {}};
    for (int t = 0; t < n; ++t) {
      if (on_line(pts[t], b.line)) b.covered.push_back(t);
    }
    branches.push_back(std::move(b));
  }
  std::sort(branches.begin(), branches.end(), [](const Branch& x, const Branch& y) {
    if (x.covered.size() != y.covered.size()) return x.covered.size() > y.covered.size();
    return x.line < y.line;
  });
  for (const Branch& b : branches) {
    std::vector<Point> rest;
    rest.reserve(pts.size() - b.covered.size());
    size_t c = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (c < b.covered.size() && static_cast<size_t>(b.covered[c]) == i) {
        ++c;
      } else {
        rest.push_back(pts[i]);
      }
    }
    if (fpt_on_kernel(kernelize(PlcInstance{std::move(rest), k - 1}))) return true;
  }
  return false;
}

}  // namespace detail

/// Bounded-depth branching decider: kernelize, then branch on the lines
/// through the first remaining point. True iff the minimum cover is <= k.
inline bool fpt_decide(const PlcInstance& inst) {
  return detail::fpt_on_kernel(kernelize(inst));
}

/// Dispatcher: exhaustive search under the cap, branching above it.
inline bool decide(const PlcInstance& inst) {
  if (inst.points.size() <= static_cast<size_t>(brute_force_point_cap)) {
    return brute_force_min_cover(inst.points) <= inst.k;
  }
  return fpt_decide(inst);
}

namespace detail {

// Any horizontal line works for a point nothing else needs to share.
inline Line singleton_line(const Point& p) {
  return Line(Int(0), p.y.den(), -p.y.num());
}

inline bool cover_search(std::vector<Point> pts, int k, std::vector<Line>& acc) {
  const int n = static_cast<int>(pts.size());
  if (n == 0) return true;
  if (k <= 0) return false;
  if (2 * k >= n) {
    for (int i = 0; i + 1 < n; i += 2) acc.push_back(line_through(pts[i], pts[i + 1]));
    if (n % 2 == 1) acc.push_back(singleton_line(pts.back()));
    return true;
  }
  auto cands = candidate_lines(pts);
  auto take = [&](const CandidateLine& cand) {
    std::vector<Point> rest;
    size_t c = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (c < cand.covered.size() && static_cast<size_t>(cand.covered[c]) == i) {
        ++c;
      } else {
        rest.push_back(pts[i]);
      }
    }
    return rest;
  };
  for (const auto& cand : cands) {
    if (static_cast<int>(cand.covered.size()) >= k + 1) {
      // Mandatory: without this line its points would need k+1 separate lines.
      acc.push_back(cand.line);
      if (cover_search(take(cand), k - 1, acc)) return true;
      acc.pop_back();
      return false;
    }
  }
  if (pts.size() > static_cast<size_t>(k) * static_cast<size_t>(k)) return false;
  std::vector<const CandidateLine*> through_first;
  for (const auto& cand : cands) {
    if (!cand.covered.empty() && cand.covered.front() == 0) through_first.push_back(&cand);
  }
  std::sort(through_first.begin(), through_first.end(),
            [](const CandidateLine* x, const CandidateLine* y) {
              if (x->covered.size() != y->covered.size())
                return x->covered.size() > y->covered.size();
              return x->line < y->line;
            });
  for (const CandidateLine* cand : through_first) {
    acc.push_back(cand->line);
    if (cover_search(take(*cand), k - 1, acc)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace detail

/// Witness variant of decide: at most k lines covering every point, or empty
/// when the answer is no.
inline std::optional<std::vector<Line>> find_cover(const PlcInstance& inst) {
  std::vector<Line> acc;
  if (!detail::cover_search(inst.points, inst.k, acc)) return std::nullopt;
  return acc;
}

}  // namespace plc
