#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "plc/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "plcover_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string cmd = std::string(PLCOVER_BIN) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, slurp(out), slurp(err)};
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

const std::string grid9 =
    "9 3\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n";

}  // namespace

TEST_CASE("solve reports yes and no through the exit code") {
  const auto yes = write_file("grid_k3.plc", grid9);
  auto r = run("solve " + yes.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "yes\n");

  const auto no = write_file("grid_k2.plc",
                             "9 2\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n");
  r = run("solve " + no.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out == "no\n");
}

TEST_CASE("solve can print a witness") {
  const auto file = write_file("grid_w.plc", grid9);
  const auto r = run("solve --witness " + file.string());
  CHECK(r.exit_code == 0);
  REQUIRE(r.out.rfind("yes\n", 0) == 0);
  std::istringstream lines(r.out.substr(4));
  plc::PlcInstance inst{{}, 0};
  {
    std::istringstream in(grid9);
    inst = plc::parse_plc(in);
  }
  std::string line;
  std::vector<plc::Line> cover;
  while (std::getline(lines, line)) {
    REQUIRE(line.rfind("# ", 0) == 0);
    std::istringstream ls(line.substr(2));
    std::string a, b, c;
    REQUIRE((ls >> a >> b >> c));
    cover.emplace_back(plc::Int(a), plc::Int(b), plc::Int(c));
  }
  CHECK(cover.size() <= 3);
  for (const plc::Point& p : inst.points) {
    bool covered = false;
    for (const plc::Line& l : cover) covered = covered || on_line(p, l);
    CHECK(covered);
  }
}

TEST_CASE("kernelize emits a reduced instance") {
  const auto file =
      write_file("mand.plc", "5 2\n0 0\n1 0\n2 0\n3 0\n5 5\n");
  const auto r = run("kernelize " + file.string());
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  const auto reduced = plc::parse_plc(in);
  CHECK(reduced.k == 1);
  REQUIRE(reduced.points.size() == 1);
  CHECK(r.out.find("# 0 1 0\n") != std::string::npos);
}

TEST_CASE("dualize maps lines to points") {
  const auto file = write_file("pair.lpc", "2 1\n0 0\n1 0\n");
  const auto r = run("dualize " + file.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2 1\n0 0\n1 0\n");
}

TEST_CASE("reduce-vc produces a solvable instance") {
  const auto file = write_file("k2.graph", "2 1 1\n1 2\n");
  const auto r = run("reduce-vc " + file.string());
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  const auto inst = plc::parse_plc(in);
  CHECK(inst.points.size() == 4);
  CHECK(inst.k == 2);
  const auto again = run("reduce-vc " + file.string());
  CHECK(again.out == r.out);
  const auto other = run("reduce-vc --seed 7 " + file.string());
  CHECK(other.exit_code == 0);
  CHECK(other.out != r.out);

  const auto lpc = run("reduce-vc --target lpc " + file.string());
  CHECK(lpc.exit_code == 0);
  std::istringstream lin(lpc.out);
  CHECK(plc::parse_lpc(lin).lines.size() == 4);

  const auto out_file = write_file("k2.plc", r.out);
  CHECK(run("solve " + out_file.string()).exit_code == 0);
}

TEST_CASE("order type subcommands") {
  const auto file = write_file("tri.plc", "3 0\n0 0\n1 0\n0 1\n");
  const auto plain = run("ordertype " + file.string());
  CHECK(plain.exit_code == 0);
  CHECK(plain.out == "otr 3\n+\n");
  const auto canon = run("canon " + file.string());
  CHECK(canon.exit_code == 0);
  CHECK(canon.out == "otr 3\n-\n");

  const auto mirrored = write_file("tri2.plc", "3 0\n0 0\n0 1\n1 0\n");
  CHECK(run("equiv " + file.string() + " " + mirrored.string()).exit_code == 0);
  const auto flat = write_file("flat.plc", "3 0\n0 0\n1 1\n2 2\n");
  const auto r = run("equiv " + file.string() + " " + flat.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out == "inequivalent\n");
}

TEST_CASE("enumerate prints a catalog") {
  const auto r = run("enumerate -n 3 -g 3");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  const auto cat = plc::parse_catalog(in);
  CHECK(cat.entries.size() == 2);
}

TEST_CASE("protocol subcommand") {
  const auto file = write_file("proto.plc", "3 0\n0 0\n1 1\n2 2\n");
  const auto r = run("protocol -g 3 " + file.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("answer=1") != std::string::npos);
  CHECK(r.out.find("A->B") != std::string::npos);
}

TEST_CASE("gen writes instances with metadata") {
  const auto r = run("gen --kind planted -n 6 -k 2 -g 5 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("# gen planted n=6 k=2 g=5 seed=3\n", 0) == 0);
  std::istringstream in(r.out);
  const auto inst = plc::parse_plc(in);
  CHECK(inst.points.size() == 6);
  CHECK(inst.k == 2);
  CHECK(run("gen --kind planted -n 6 -k 2 -g 5 --seed 3").out == r.out);

  const auto grid = run("gen --kind grid -g 3 -k 3");
  CHECK(grid.exit_code == 0);
  std::istringstream gin(grid.out);
  CHECK(plc::parse_plc(gin).points.size() == 9);
}

TEST_CASE("errors exit with code two") {
  CHECK(run("solve " + (work_dir() / "missing.plc").string()).exit_code == 2);
  const auto bad = write_file("bad.plc", "2 1\n0 0\n");
  const auto r = run("solve " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(run("gen --kind planted -n 4 -k 1 -g 4").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("solve").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}
