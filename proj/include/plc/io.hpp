#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plc/core.hpp"
#include "plc/duality.hpp"
#include "plc/errors.hpp"
#include "plc/geometry.hpp"
#include "plc/order_types.hpp"
#include "plc/protocol.hpp"
#include "plc/random.hpp"
#include "plc/vc_reduction.hpp"

namespace plc {

namespace detail {

/// Tokenizing reader over a text stream: '#' starts a comment, blank lines
/// are skipped, line numbers are 1-based for error reporting.
struct LineReader {
  std::istream& in;
  int lineno = 0;

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(lineno, what);
  }

  void expect(std::vector<std::string>& tokens, size_t count,
              const std::string& what) {
    if (!next(tokens)) throw parse_error(lineno + 1, "unexpected end of input, expected " + what);
    if (tokens.size() != count) fail("expected " + what);
  }
};

inline bool valid_integer_token(const std::string& s) {
  size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// cpp_int's string constructor rejects an explicit '+'.
inline Int int_from_token(const std::string& s) {
  return Int(s.front() == '+' ? s.substr(1) : s);
}

}  // namespace detail

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!detail::valid_integer_token(s))
      throw std::invalid_argument("parse_rational: bad integer '" + s + "'");
    return Rational(detail::int_from_token(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!detail::valid_integer_token(num) || !detail::valid_integer_token(den))
    throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  const Int d = detail::int_from_token(den);
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  return Rational(detail::int_from_token(num), d);
}

namespace detail {

inline Rational read_rational(LineReader& r, const std::string& tok) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

inline long long read_int(LineReader& r, const std::string& tok,
                          const std::string& what) {
  if (!valid_integer_token(tok)) r.fail("bad " + what + " '" + tok + "'");
  try {
    return std::stoll(tok);
  } catch (const std::exception&) {
    r.fail(what + " out of range '" + tok + "'");
  }
}

}  // namespace detail

/// Point line cover instance: header "n k", then n lines "x y".
inline PlcInstance parse_plc(std::istream& in) {
  detail::LineReader r{in};
  std::vector<std::string> tok;
  r.expect(tok, 2, "header 'n k'");
  const long long n = detail::read_int(r, tok[0], "point count");
  const long long k = detail::read_int(r, tok[1], "budget");
  if (n < 0) r.fail("negative point count");
  if (k < 0) r.fail("negative budget");
  PlcInstance inst;
  inst.k = static_cast<int>(k);
  inst.points.reserve(n);
  for (long long i = 0; i < n; ++i) {
    r.expect(tok, 2, "point 'x y'");
    inst.points.push_back(
        {detail::read_rational(r, tok[0]), detail::read_rational(r, tok[1])});
  }
  if (r.next(tok)) r.fail("trailing content");
  if (!points_distinct(inst.points)) throw parse_error(1, "duplicate point");
  return inst;
}

inline void emit_plc(std::ostream& out, const PlcInstance& inst) {
  out << inst.points.size() << ' ' << inst.k << '\n';
  for (const Point& p : inst.points)
    out << p.x.str() << ' ' << p.y.str() << '\n';
}

/// Line point cover instance: header "m k", then m lines "slope intercept".
inline LpcInstance parse_lpc(std::istream& in) {
  detail::LineReader r{in};
  std::vector<std::string> tok;
  r.expect(tok, 2, "header 'm k'");
  const long long m = detail::read_int(r, tok[0], "line count");
  const long long k = detail::read_int(r, tok[1], "budget");
  if (m < 0) r.fail("negative line count");
  if (k < 0) r.fail("negative budget");
  LpcInstance inst;
  inst.k = static_cast<int>(k);
  inst.lines.reserve(m);
  for (long long i = 0; i < m; ++i) {
    r.expect(tok, 2, "line 'slope intercept'");
    inst.lines.push_back(
        {detail::read_rational(r, tok[0]), detail::read_rational(r, tok[1])});
  }
  if (r.next(tok)) r.fail("trailing content");
  auto sorted = inst.lines;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw parse_error(1, "duplicate line");
  return inst;
}

inline void emit_lpc(std::ostream& out, const LpcInstance& inst) {
  out << inst.lines.size() << ' ' << inst.k << '\n';
  for (const SlopeInterceptLine& l : inst.lines)
    out << l.slope.str() << ' ' << l.intercept.str() << '\n';
}

/// Vertex cover instance: header "n m k", then m edges "u v", 1-indexed.
inline VcInstance parse_graph(std::istream& in) {
  detail::LineReader r{in};
  std::vector<std::string> tok;
  r.expect(tok, 3, "header 'n m k'");
  const long long n = detail::read_int(r, tok[0], "vertex count");
  const long long m = detail::read_int(r, tok[1], "edge count");
  const long long k = detail::read_int(r, tok[2], "budget");
  if (n < 0) r.fail("negative vertex count");
  if (m < 0) r.fail("negative edge count");
  if (k < 0) r.fail("negative budget");
  VcInstance inst;
  inst.graph.n = static_cast<int>(n);
  inst.k = static_cast<int>(k);
  inst.graph.edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    r.expect(tok, 2, "edge 'u v'");
    const long long u = detail::read_int(r, tok[0], "vertex");
    const long long v = detail::read_int(r, tok[1], "vertex");
    if (u < 1 || u > n || v < 1 || v > n) r.fail("vertex out of range");
    if (u == v) r.fail("self-loop");
    inst.graph.edges.emplace_back(static_cast<int>(u - 1),
                                  static_cast<int>(v - 1));
  }
  if (r.next(tok)) r.fail("trailing content");
  const size_t before = inst.graph.edges.size();
  normalize_edges(inst.graph);
  if (inst.graph.edges.size() != before) throw parse_error(1, "duplicate edge");
  return inst;
}

inline void emit_graph(std::ostream& out, const VcInstance& inst) {
  out << inst.graph.n << ' ' << inst.graph.edges.size() << ' ' << inst.k
      << '\n';
  for (const auto& [u, v] : inst.graph.edges)
    out << u + 1 << ' ' << v + 1 << '\n';
}

inline char sign_symbol(int8_t s) { return s < 0 ? '-' : (s > 0 ? '+' : '0'); }

inline std::string otr_string(const Otr& o) {
  std::string out;
  out.reserve(o.signs.size());
  for (const int8_t s : o.signs) out.push_back(sign_symbol(s));
  return out;
}

/// Order type representation: header "otr n", then (for n >= 3) one line of
/// C(n,3) symbols from {-,0,+}, triples in lexicographic index order.
inline Otr parse_otr(std::istream& in) {
  detail::LineReader r{in};
  std::vector<std::string> tok;
  r.expect(tok, 2, "header 'otr n'");
  if (tok[0] != "otr") r.fail("expected 'otr' header");
  const long long n = detail::read_int(r, tok[1], "point count");
  if (n < 0) r.fail("negative point count");
  Otr out;
  out.n = static_cast<int>(n);
  const size_t want = static_cast<size_t>(n) * (n - 1) * (n - 2) / 6;
  if (want > 0) {
    r.expect(tok, 1, "sign string");
    if (tok[0].size() != want) r.fail("expected " + std::to_string(want) + " signs");
    for (const char c : tok[0]) {
      if (c == '-') out.signs.push_back(-1);
      else if (c == '0') out.signs.push_back(0);
      else if (c == '+') out.signs.push_back(1);
      else r.fail(std::string("bad sign character '") + c + "'");
    }
  }
  if (r.next(tok)) r.fail("trailing content");
  return out;
}

inline void emit_otr(std::ostream& out, const Otr& o) {
  out << "otr " << o.n << '\n';
  if (!o.signs.empty()) out << otr_string(o) << '\n';
}

/// Catalog: header "catalog n g count", then per entry one line holding the
/// sign string ("." when empty) and the representative's 2n coordinates.
inline OrderTypeCatalog parse_catalog(std::istream& in) {
  detail::LineReader r{in};
  std::vector<std::string> tok;
  r.expect(tok, 4, "header 'catalog n g count'");
  if (tok[0] != "catalog") r.fail("expected 'catalog' header");
  const long long n = detail::read_int(r, tok[1], "point count");
  const long long g = detail::read_int(r, tok[2], "grid side");
  const long long count = detail::read_int(r, tok[3], "entry count");
  if (n < 0 || g < 0 || count < 0) r.fail("negative header field");
  OrderTypeCatalog cat;
  cat.n = static_cast<int>(n);
  cat.grid = static_cast<int>(g);
  const size_t want = static_cast<size_t>(n) * (n - 1) * (n - 2) / 6;
  for (long long e = 0; e < count; ++e) {
    r.expect(tok, 1 + 2 * static_cast<size_t>(n), "catalog entry");
    CatalogEntry entry;
    entry.otr.n = static_cast<int>(n);
    const std::string& signs = tok[0];
    if (signs != ".") {
      if (signs.size() != want) r.fail("expected " + std::to_string(want) + " signs");
      for (const char c : signs) {
        if (c == '-') entry.otr.signs.push_back(-1);
        else if (c == '0') entry.otr.signs.push_back(0);
        else if (c == '+') entry.otr.signs.push_back(1);
        else r.fail(std::string("bad sign character '") + c + "'");
      }
    } else if (want != 0) {
      r.fail("expected " + std::to_string(want) + " signs");
    }
    for (long long i = 0; i < n; ++i)
      entry.representative.push_back(
          {detail::read_rational(r, tok[1 + 2 * i]),
           detail::read_rational(r, tok[2 + 2 * i])});
    cat.entries.push_back(std::move(entry));
  }
  if (r.next(tok)) r.fail("trailing content");
  for (size_t i = 1; i < cat.entries.size(); ++i)
    if (!(cat.entries[i - 1].otr < cat.entries[i].otr))
      throw parse_error(1, "catalog entries not strictly sorted");
  return cat;
}

inline void emit_catalog(std::ostream& out, const OrderTypeCatalog& cat) {
  out << "catalog " << cat.n << ' ' << cat.grid << ' ' << cat.entries.size()
      << '\n';
  for (const CatalogEntry& e : cat.entries) {
    out << (e.otr.signs.empty() ? "." : otr_string(e.otr));
    for (const Point& p : e.representative)
      out << ' ' << p.x.str() << ' ' << p.y.str();
    out << '\n';
  }
}

inline std::string format_transcript(const ProtocolTranscript& tr) {
  std::ostringstream out;
  out << "protocol grid=" << tr.grid << " catalog=" << tr.catalog_size
      << " rounds=" << tr.rounds << " alice_bits=" << tr.alice_cost_bits
      << " answer=" << tr.answer << '\n';
  for (const ProtocolMessage& m : tr.messages) {
    out << (m.direction == Direction::alice_to_bob ? "A->B " : "B->A ")
        << (m.payload.empty() ? "." : m.payload);
    if (m.direction == Direction::alice_to_bob) out << " [" << m.bits << "]";
    out << '\n';
  }
  return out.str();
}

enum class GeneratorKind { planted, uniform, grid };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::grid;
  int n = 0;  // points to emit; for grid, the number of rows (0 means g)
  int k = 0;  // budget written into the instance
  int g = 2;  // coordinate range: points live in [0,g)^2
  uint64_t seed = 0;
};

namespace detail {

inline std::vector<Point> lattice_points_on(const Line& l, int g) {
  std::vector<Point> out;
  if (l.b() == 0) {
    const Rational x = Rational(-l.c()) / Rational(l.a());
    if (x.is_integer() && x.sign() >= 0 && x < Rational(g))
      for (int y = 0; y < g; ++y) out.push_back({x, Rational(y)});
    return out;
  }
  for (int x = 0; x < g; ++x) {
    const Rational y = Rational(-l.c() - l.a() * x) / Rational(l.b());
    if (y.is_integer() && y.sign() >= 0 && y < Rational(g))
      out.push_back({Rational(x), y});
  }
  return out;
}

inline PlcInstance generate_planted(const GeneratorSpec& spec) {
  if (spec.g < 2)
    throw std::invalid_argument("generate: planted needs grid side >= 2");
  if (spec.k < 1)
    throw std::invalid_argument("generate: planted needs at least one line");
  std::mt19937_64 rng(spec.seed);
  const uint64_t cells = static_cast<uint64_t>(spec.g) * spec.g;
  std::set<Line> lines;
  uint64_t attempts = 0;
  while (static_cast<int>(lines.size()) < spec.k) {
    if (++attempts > 10000ull * spec.k + 1000)
      throw std::invalid_argument("generate: could not plant distinct lines");
    const uint64_t i = uniform_below(rng, cells);
    const uint64_t j = uniform_below(rng, cells);
    if (i == j) continue;
    const Point p{Rational(static_cast<long long>(i / spec.g)),
                  Rational(static_cast<long long>(i % spec.g))};
    const Point q{Rational(static_cast<long long>(j / spec.g)),
                  Rational(static_cast<long long>(j % spec.g))};
    lines.insert(line_through(p, q));
  }
  std::set<Point> coverable;
  for (const Line& l : lines)
    for (const Point& p : lattice_points_on(l, spec.g)) coverable.insert(p);
  if (static_cast<int>(coverable.size()) < spec.n)
    throw std::invalid_argument(
        "generate: planted lines cover fewer than n grid points");
  std::vector<Point> pool(coverable.begin(), coverable.end());
  for (int i = 0; i < spec.n; ++i) {
    const uint64_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(spec.n);
  std::sort(pool.begin(), pool.end());
  return {std::move(pool), spec.k};
}

inline PlcInstance generate_uniform(const GeneratorSpec& spec) {
  if (spec.g < 1)
    throw std::invalid_argument("generate: uniform needs grid side >= 1");
  const uint64_t cells = static_cast<uint64_t>(spec.g) * spec.g;
  if (static_cast<uint64_t>(spec.n) > cells)
    throw std::invalid_argument("generate: more points than grid cells");
  std::mt19937_64 rng(spec.seed);
  std::set<Point> pts;
  while (static_cast<int>(pts.size()) < spec.n) {
    pts.insert({Rational(static_cast<long long>(uniform_below(rng, static_cast<uint64_t>(spec.g)))),
                Rational(static_cast<long long>(uniform_below(rng, static_cast<uint64_t>(spec.g))))});
  }
  return {{pts.begin(), pts.end()}, spec.k};
}

inline PlcInstance generate_grid(const GeneratorSpec& spec) {
  if (spec.g < 1)
    throw std::invalid_argument("generate: grid needs grid side >= 1");
  const int rows = spec.n > 0 ? spec.n : spec.g;
  PlcInstance inst;
  inst.k = spec.k;
  inst.points.reserve(static_cast<size_t>(rows) * spec.g);
  for (int x = 0; x < spec.g; ++x)
    for (int y = 0; y < rows; ++y)
      inst.points.push_back({Rational(x), Rational(y)});
  std::sort(inst.points.begin(), inst.points.end());
  return inst;
}

}  // namespace detail

/// Deterministic instance generators; identical spec -> identical instance.
inline PlcInstance generate(const GeneratorSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("generate: negative point count");
  if (spec.k < 0) throw std::invalid_argument("generate: negative budget");
  switch (spec.kind) {
    case GeneratorKind::planted: return detail::generate_planted(spec);
    case GeneratorKind::uniform: return detail::generate_uniform(spec);
    case GeneratorKind::grid: return detail::generate_grid(spec);
  }
  throw std::invalid_argument("generate: unknown kind");
}

}  // namespace plc
