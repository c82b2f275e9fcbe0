#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "plc/io.hpp"

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

plc::PlcInstance read_plc(const std::string& path) {
  auto in = open_or_throw(path);
  return plc::parse_plc(in);
}

void print_line(const plc::Line& l) {
  std::cout << "# " << l.a() << ' ' << l.b() << ' ' << l.c() << '\n';
}

int cmd_solve(const std::string& path, bool witness) {
  const plc::PlcInstance inst = read_plc(path);
  if (witness) {
    const auto cover = plc::find_cover(inst);
    if (!cover) {
      std::cout << "no\n";
      return 1;
    }
    std::cout << "yes\n";
    for (const plc::Line& l : *cover) print_line(l);
    return 0;
  }
  if (plc::decide(inst)) {
    std::cout << "yes\n";
    return 0;
  }
  std::cout << "no\n";
  return 1;
}

int cmd_kernelize(const std::string& path) {
  const plc::KernelReport report = plc::kernelize(read_plc(path));
  for (const plc::Line& l : report.mandatory_lines) print_line(l);
  if (report.decided)
    std::cout << "# decided " << (*report.decided ? "yes" : "no") << '\n';
  plc::emit_plc(std::cout, report.reduced);
  return 0;
}

int cmd_dualize(const std::string& path) {
  auto in = open_or_throw(path);
  plc::emit_plc(std::cout, plc::dualize_lpc(plc::parse_lpc(in)));
  return 0;
}

int cmd_reduce_vc(const std::string& path, uint64_t seed,
                  const std::string& target) {
  auto in = open_or_throw(path);
  const plc::VcInstance inst = plc::parse_graph(in);
  std::cout << "# seed " << seed << '\n';
  if (target == "lpc")
    plc::emit_lpc(std::cout, plc::vc_to_lpc(inst, seed));
  else
    plc::emit_plc(std::cout, plc::vc_to_plc(inst, seed));
  return 0;
}

int cmd_ordertype(const std::string& path, bool canonical) {
  const plc::PlcInstance inst = read_plc(path);
  const plc::Otr o =
      canonical ? plc::canonical_otr(inst.points) : plc::otr(inst.points);
  plc::emit_otr(std::cout, o);
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b) {
  const plc::PlcInstance ia = read_plc(a);
  const plc::PlcInstance ib = read_plc(b);
  if (plc::equivalent(ia.points, ib.points)) {
    std::cout << "equivalent\n";
    return 0;
  }
  std::cout << "inequivalent\n";
  return 1;
}

int cmd_enumerate(int n, int g) {
  plc::emit_catalog(std::cout, plc::enumerate_grid_order_types(n, g));
  return 0;
}

int cmd_protocol(const std::string& path, int g) {
  const plc::PlcInstance inst = read_plc(path);
  std::cout << plc::format_transcript(
      plc::run_protocol(inst.points, plc::ProtocolConfig{g}));
  return 0;
}

int cmd_gen(const std::string& kind, int n, int k, int g, uint64_t seed,
            bool seed_set) {
  plc::GeneratorSpec spec;
  if (kind == "planted") spec.kind = plc::GeneratorKind::planted;
  else if (kind == "uniform") spec.kind = plc::GeneratorKind::uniform;
  else spec.kind = plc::GeneratorKind::grid;
  if (spec.kind != plc::GeneratorKind::grid && !seed_set)
    throw std::runtime_error("--seed is required for randomized generators");
  spec.n = n;
  spec.k = k;
  spec.g = g;
  spec.seed = seed;
  const plc::PlcInstance inst = plc::generate(spec);
  std::cout << "# gen " << kind << " n=" << n << " k=" << k << " g=" << g;
  if (spec.kind != plc::GeneratorKind::grid) std::cout << " seed=" << seed;
  std::cout << '\n';
  plc::emit_plc(std::cout, inst);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point line cover toolkit"};
  app.require_subcommand(1);

  std::string file_a;
  std::string file_b;
  bool witness = false;
  uint64_t seed = plc::default_reduction_seed;
  std::string target = "plc";
  std::string kind;
  int n = 0;
  int k = 0;
  int g = 2;

  auto* solve = app.add_subcommand("solve", "decide whether k lines cover the points");
  solve->add_option("file", file_a, "plc instance")->required();
  solve->add_flag("--witness", witness, "search for and print a covering set of lines");

  auto* kern = app.add_subcommand("kernelize", "apply the reduction rules exhaustively");
  kern->add_option("file", file_a, "plc instance")->required();

  auto* dual = app.add_subcommand("dualize", "map a line point cover instance to its dual");
  dual->add_option("file", file_a, "lpc instance")->required();

  auto* reduce = app.add_subcommand("reduce-vc", "reduce a vertex cover instance");
  reduce->add_option("file", file_a, "graph instance")->required();
  reduce->add_option("--seed", seed, "seed for the special position points");
  reduce->add_option("--target", target, "output kind: plc (default) or lpc")
      ->check(CLI::IsMember({"plc", "lpc"}));

  auto* ot = app.add_subcommand("ordertype", "print the order type representation");
  ot->add_option("file", file_a, "plc instance (budget ignored)")->required();

  auto* canon = app.add_subcommand("canon", "print the canonical order type representation");
  canon->add_option("file", file_a, "plc instance (budget ignored)")->required();

  auto* equiv = app.add_subcommand("equiv", "test two point sets for combinatorial equivalence");
  equiv->add_option("first", file_a, "plc instance")->required();
  equiv->add_option("second", file_b, "plc instance")->required();

  auto* enumerate = app.add_subcommand("enumerate", "catalog the order types of grid subsets");
  enumerate->add_option("-n,--points", n, "subset size")->required();
  enumerate->add_option("-g,--grid", g, "grid side")->required();

  auto* proto = app.add_subcommand("protocol", "run the communication game on grid points");
  proto->add_option("file", file_a, "plc instance (budget ignored)")->required();
  proto->add_option("-g,--grid", g, "grid side")->required();

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind, "planted, uniform, or grid")
      ->required()
      ->check(CLI::IsMember({"planted", "uniform", "grid"}));
  gen->add_option("-n,--points", n, "point count (grid: rows, 0 means g)");
  gen->add_option("-k,--budget", k, "budget written into the instance");
  gen->add_option("-g,--grid", g, "coordinate range");
  auto* seed_opt = gen->add_option("--seed", seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(file_a, witness);
    if (kern->parsed()) return cmd_kernelize(file_a);
    if (dual->parsed()) return cmd_dualize(file_a);
    if (reduce->parsed()) return cmd_reduce_vc(file_a, seed, target);
    if (ot->parsed()) return cmd_ordertype(file_a, false);
    if (canon->parsed()) return cmd_ordertype(file_a, true);
    if (equiv->parsed()) return cmd_equiv(file_a, file_b);
    if (enumerate->parsed()) return cmd_enumerate(n, g);
    if (proto->parsed()) return cmd_protocol(file_a, g);
    if (gen->parsed())
      return cmd_gen(kind, n, k, g, seed, seed_opt->count() > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
