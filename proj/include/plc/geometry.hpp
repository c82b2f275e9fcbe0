#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "plc/rational.hpp"

namespace plc {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Orientation of an ordered point triple: counter-clockwise, collinear, or
/// clockwise. The numeric values are the sign of the underlying determinant.
enum class Orientation : int {
  clockwise = -1,
  collinear = 0,
  counterclockwise = 1,
};

inline int orientation_value(Orientation o) { return static_cast<int>(o); }

/// Sign of det [[1, p.x, p.y], [1, q.x, q.y], [1, r.x, r.y]], computed
/// exactly. Repeated points give collinear.
inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Rational cross =
      (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return static_cast<Orientation>(cross.sign());
}

/// A line a*x + b*y + c = 0 with integer coefficients in canonical form:
/// (a,b) != (0,0), gcd(|a|,|b|,|c|) = 1, and the first nonzero of (a,b) is
/// positive. Equal geometric lines therefore have identical coefficients.
class Line {
 public:
  Line(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw std::invalid_argument("Line: a and b both zero");
    normalize();
  }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }

  bool vertical() const { return b_ == 0; }

  friend bool operator==(const Line& l, const Line& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend bool operator!=(const Line& l, const Line& r) { return !(l == r); }
  friend bool operator<(const Line& l, const Line& r) {
    return std::tie(l.a_, l.b_, l.c_) < std::tie(r.a_, r.b_, r.c_);
  }

 private:
  void normalize() {
    namespace mp = boost::multiprecision;
    Int g = mp::gcd(mp::gcd(abs(a_), abs(b_)), abs(c_));
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
    const bool flip = a_ != 0 ? a_ < 0 : b_ < 0;
    if (flip) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
  }

  static Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

  Int a_;
  Int b_;
  Int c_;
};

/// True iff p satisfies the line equation exactly.
inline bool on_line(const Point& p, const Line& l) {
  return (Rational(l.a()) * p.x + Rational(l.b()) * p.y + Rational(l.c())).sign() == 0;
}

/// Canonical line through two distinct points.
inline Line line_through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line_through: identical points");
  const Rational a = p.y - q.y;
  const Rational b = q.x - p.x;
  const Rational c = -(a * p.x + b * p.y);
  // Clear denominators; the common multiplier does not change the line.
  const Int m = boost::multiprecision::lcm(
      boost::multiprecision::lcm(a.den(), b.den()), c.den());
  return Line(a.num() * (m / a.den()), b.num() * (m / b.den()),
              c.num() * (m / c.den()));
}

/// Unique common point of two distinct lines, or empty if they are parallel.
inline std::optional<Point> intersect(const Line& l1, const Line& l2) {
  if (l1 == l2) throw std::invalid_argument("intersect: identical lines");
  const Int det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) return std::nullopt;
  return Point{Rational(l1.b() * l2.c() - l2.b() * l1.c(), det),
               Rational(l2.a() * l1.c() - l1.a() * l2.c(), det)};
}

/// True iff every triple of the given points is collinear. Vacuously true
/// for two or fewer points; duplicates are allowed.
inline bool collinear(std::span<const Point> points) {
  // Equivalent to the all-triples test: pick two distinct points and check
  // that everything lies on the line they define.
  size_t first = 0;
  while (first < points.size() && points[first] == points[0]) ++first;
  if (first == points.size()) return true;  // at most one distinct location
  const Line l = line_through(points[0], points[first]);
  for (const Point& p : points) {
    if (!on_line(p, l)) return false;
  }
  return true;
}

inline bool collinear(const std::vector<Point>& points) {
  return collinear(std::span<const Point>(points));
}

}  // namespace plc
