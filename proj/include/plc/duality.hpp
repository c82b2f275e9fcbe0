#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "plc/core.hpp"
#include "plc/geometry.hpp"

namespace plc {

/// Non-vertical line y = slope * x + intercept.
struct SlopeInterceptLine {
  Rational slope;
  Rational intercept;

  friend bool operator==(const SlopeInterceptLine& a, const SlopeInterceptLine& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
  friend bool operator!=(const SlopeInterceptLine& a, const SlopeInterceptLine& b) {
    return !(a == b);
  }
  friend bool operator<(const SlopeInterceptLine& a, const SlopeInterceptLine& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept < b.intercept;
  }
};

/// Line Point Cover instance: can the lines be covered by at most k points?
struct LpcInstance {
  std::vector<SlopeInterceptLine> lines;  // pairwise distinct
  int k = 0;
};

inline bool incident(const Point& p, const SlopeInterceptLine& l) {
  return p.y == l.slope * p.x + l.intercept;
}

/// Dual of y = m*x + c is the point (m, -c). A point set covers the lines
/// iff the dual points are covered by the duals of the cover points, so the
/// output is an equivalent Point Line Cover instance with the same k.
inline PlcInstance dualize_lpc(const LpcInstance& inst) {
  std::vector<Point> points;
  points.reserve(inst.lines.size());
  for (const auto& l : inst.lines) points.push_back(Point{l.slope, -l.intercept});
  if (!points_distinct(points)) {
    throw std::invalid_argument("dualize_lpc: duplicate lines");
  }
  return PlcInstance{std::move(points), inst.k};
}

/// Dual of the point (a, b) is the line y = a*x - b.
inline SlopeInterceptLine dualize_point(const Point& p) {
  return SlopeInterceptLine{p.x, -p.y};
}

struct ShearResult {
  Int t;  // smallest shear multiplier that leaves no image vertical
  std::vector<SlopeInterceptLine> lines;
};

/// Applies (x, y) -> (x + t*y, y) with the smallest integer t >= 0 making
/// every image line non-vertical, then rewrites them in slope-intercept
/// form. The shear has determinant 1, so incidences and orientations are
/// preserved exactly.
inline ShearResult shear_to_slope_intercept(const std::vector<Line>& lines) {
  // Substituting x = x' - t*y' turns a*x + b*y + c = 0 into
  // a*x' + (b - a*t)*y' + c = 0, vertical iff b - a*t = 0. Each line rules
  // out at most one t, so some t in {0, ..., |lines|} works.
  Int t = 0;
  for (;; ++t) {
    const bool ok = std::none_of(lines.begin(), lines.end(), [&](const Line& l) {
      return l.b() - l.a() * t == 0;
    });
    if (ok) break;
  }
  ShearResult result;
  result.t = t;
  result.lines.reserve(lines.size());
  for (const Line& l : lines) {
    const Int denom = l.b() - l.a() * t;
    result.lines.push_back(SlopeInterceptLine{Rational(-l.a(), denom),
                                              Rational(-l.c(), denom)});
  }
  return result;
}

}  // namespace plc
