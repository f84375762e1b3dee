#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "bihom/catalog.hpp"
#include "bihom/io.hpp"
#include "bihom/twist.hpp"
#include "support.hpp"

#ifndef BIHOM_CLI_PATH
#error "BIHOM_CLI_PATH must point at the bihom executable"
#endif

using namespace bihom;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("bihom_cli_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
};

fs::path workdir() {
  static const TempDir dir;
  return dir.path;
}

std::string at(const std::string& name) { return (workdir() / name).string(); }

Run run(const std::string& args) {
  const std::string out = at("stdout.txt"), err = at("stderr.txt");
  const std::string cmd = std::string("\"") + BIHOM_CLI_PATH + "\" " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

std::string replaced_first(std::string s, const std::string& from, const std::string& to) {
  return s.replace(s.find(from), from.size(), to);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

/// Runs twice and requires identical stdout.
Run run_stable(const std::string& args) {
  const Run first = run(args);
  const Run second = run(args);
  CHECK(first.code == second.code);
  CHECK(first.out == second.out);
  return first;
}

void write_so3(const std::string& path) {
  StructureTensor so3(3);
  so3.set_product(0, 1, {0, 0, 1});
  so3.set_product(1, 0, {0, 0, -1});
  so3.set_product(1, 2, {1, 0, 0});
  so3.set_product(2, 1, {-1, 0, 0});
  so3.set_product(2, 0, {0, 1, 0});
  so3.set_product(0, 2, {0, -1, 0});
  save_algebra(BiHomAlgebra::from_lie(so3), path);
}

}  // namespace

TEST_CASE("catalog then check") {
  const Run c = run("catalog L1 --a 2 --b 3 -o " + at("l1.json"));
  CHECK(c.code == 0);
  CHECK(load_algebra(at("l1.json")) == make_L1(2, 3));
  const Run k = run("check " + at("l1.json"));
  CHECK(k.code == 0);
  CHECK(k.err.empty());
  const Run j = run_stable("check --json " + at("l1.json"));
  CHECK(j.code == 0);
  CHECK(contains(j.out, "\"all_passed\": true"));

  for (const std::string& cmd : {"catalog sl2", "catalog L2", "catalog L3 --a 3", "catalog L3 --a -1/2"}) {
    CHECK(run(cmd + " -o " + at("c.json")).code == 0);
    CHECK(run("check " + at("c.json")).code == 0);
  }
}

TEST_CASE("catalog errors") {
  CHECK(run("catalog L4 -o " + at("c.json")).code == 2);
  CHECK(run("catalog L1 --a 2 -o " + at("c.json")).code == 2);
  CHECK(run("catalog L1 --a 2/0 --b 1 -o " + at("c.json")).code == 2);
  const Run zero = run("catalog L1 --a 0 --b 1 -o " + at("c.json"));
  CHECK(zero.code == 1);
  CHECK(contains(zero.err, "ZeroParameter"));
  const Run edge = run("catalog L1 --a -1 --b 2 -o " + at("c.json"));
  CHECK(edge.code == 0);
  CHECK(contains(edge.err, "warning"));
}

TEST_CASE("check exit codes") {
  save_algebra(printed_L3(2), at("printed.json"));
  const Run bad = run_stable("check --json " + at("printed.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "\"all_passed\": false"));
  CHECK(contains(bad.err, "axiom check failed"));
  CHECK(run("check " + at("printed.json")).code == 1);

  CHECK(run("check " + at("missing.json")).code == 2);
  write_file(at("garbage.json"), "{ \"dim\": 3,\n  oops }");
  const Run g = run("check " + at("garbage.json"));
  CHECK(g.code == 2);
  CHECK(contains(g.err, "line 2"));
  write_file(at("badrat.json"), replaced_first(format_algebra(make_L2()), "\"2\"", "\"2/0\""));
  CHECK(run("check " + at("badrat.json")).code == 2);
  std::string text = format_algebra(make_L2());
  write_file(at("short.json"), text.replace(text.find("\"dim\": 3"), 8, "\"dim\": 2"));
  CHECK(run("check " + at("short.json")).code == 2);
  CHECK(run("check").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("induce") {
  save_algebra(make_L1(2, 3), at("l1.json"));
  CHECK(run("induce " + at("l1.json") + " -o " + at("ind.json")).code == 0);
  const BiHomAlgebra ind = load_algebra(at("ind.json"));
  CHECK(ind.tensor() == make_sl2());
  CHECK(ind.alpha() == make_L1(2, 3).alpha());
  CHECK(ind.beta() == make_L1(2, 3).beta());

  save_algebra(BiHomAlgebra(StructureTensor(3), MatrixQ(3, 3), MatrixQ::identity(3)), at("sing.json"));
  const Run r = run("induce " + at("sing.json") + " -o " + at("ind2.json"));
  CHECK(r.code == 1);
  CHECK(contains(r.err, "NotRegular"));
  CHECK(!fs::exists(at("ind2.json")));
}

TEST_CASE("twist") {
  save_algebra(BiHomAlgebra::from_lie(make_sl2()), at("sl2.json"));
  save_matrix(testing::sl2_torus_automorphism(2), at("alpha.json"));
  save_matrix(testing::sl2_torus_automorphism(3), at("beta.json"));
  const std::string base = "twist " + at("sl2.json") + " --alpha " + at("alpha.json");
  CHECK(run(base + " --beta " + at("beta.json") + " -o " + at("tw.json")).code == 0);
  CHECK(load_algebra(at("tw.json")) == make_L1(2, 3));

  save_matrix(unipotent_u(), at("u.json"));
  const Run nc = run(base + " --beta " + at("u.json") + " -o " + at("tw.json"));
  CHECK(nc.code == 1);
  CHECK(contains(nc.err, "NotCommuting"));

  save_matrix(MatrixQ::diagonal({2, 1, 1}), at("notaut.json"));
  const Run na = run("twist " + at("sl2.json") + " --alpha " + at("beta.json") + " --beta " + at("notaut.json") +
                     " -o " + at("tw.json"));
  CHECK(na.code == 1);
  CHECK(contains(na.err, "NotAutomorphism"));
  CHECK(contains(na.err, "beta"));

  save_matrix(MatrixQ(3, 3), at("zero.json"));
  const Run sg = run(base + " --beta " + at("zero.json") + " -o " + at("tw.json"));
  CHECK(sg.code == 1);
  CHECK(contains(sg.err, "SingularMatrix"));

  save_algebra(make_L2(), at("l2.json"));
  const Run nl = run("twist " + at("l2.json") + " --alpha " + at("alpha.json") + " --beta " + at("beta.json") +
                     " -o " + at("tw.json"));
  CHECK(nl.code == 1);
  CHECK(contains(nl.err, "NotLie"));

  CHECK(run(base + " --beta " + at("missing.json") + " -o " + at("tw.json")).code == 2);
}

TEST_CASE("analyze") {
  const BiHomAlgebra swap =
      yau_twist({testing::sl2_power_lie(2).tensor(), block_permutation(3, {1, 0}), MatrixQ::identity(6)});
  save_algebra(swap, at("swap.json"));
  const Run r = run_stable("analyze --json " + at("swap.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"sigma_alpha\": \"(1 2)\""));
  CHECK(contains(r.out, "\"sigma_beta\": \"id\""));
  CHECK(contains(r.out, "\"m\": 2"));
  CHECK(contains(r.out, "\"(A1, 2)\""));
  CHECK(contains(r.err, "m = 2"));

  save_algebra(testing::sl2_power_lie(2), at("sum.json"));
  const Run s = run_stable("analyze " + at("sum.json"));
  CHECK(s.code == 0);
  CHECK(contains(s.out, "simple ideals    2"));
  CHECK(contains(s.out, "(A1, 2)"));

  save_algebra(make_L3(3), at("l3.json"));
  const Run l3 = run_stable("analyze --json " + at("l3.json"));
  CHECK(l3.code == 0);
  CHECK(contains(l3.out, "\"enveloping_dim\": 9"));
  // det K scales by det(P)^2 under a change of basis; the tabulated basis has det P = -2
  CHECK(contains(l3.out, "\"induced_killing_det\": \"-512\""));
  CHECK(contains(l3.out, "\"induced_semisimple\": true"));

  save_algebra(printed_L3(2), at("printed.json"));
  CHECK(run("analyze " + at("printed.json")).code == 1);
  CHECK(run("analyze " + at("missing.json")).code == 2);
}

TEST_CASE("classify3") {
  save_algebra(make_L2(), at("l2.json"));
  const Run l2 = run_stable("classify3 " + at("l2.json"));
  CHECK(l2.code == 0);
  CHECK(l2.out.rfind("L2\n", 0) == 0);

  testing::Gen g(61);
  save_algebra(make_L1(Rational(1, 2), Rational(1, 3)).change_basis(g.invertible(3)), at("l1c.json"));
  const Run l1 = run_stable("classify3 --json " + at("l1c.json"));
  CHECK(l1.code == 0);
  CHECK(contains(l1.out, "\"family\": \"L1\""));
  CHECK(contains(l1.out, "\"2\",\n    \"3\""));

  save_algebra(BiHomAlgebra::from_lie(StructureTensor(3)), at("abelian.json"));
  const Run ns = run("classify3 " + at("abelian.json"));
  CHECK(ns.code == 1);
  CHECK(contains(ns.err, "NotSimple"));

  write_so3(at("so3.json"));
  const Run nsp = run("classify3 " + at("so3.json"));
  CHECK(nsp.code == 1);
  CHECK(contains(nsp.err, "NotSplit"));

  const MatrixQ weyl{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}};
  save_algebra(yau_twist({make_sl2(), MatrixQ::diagonal({1, -1, -1}), weyl}), at("klein.json"));
  const Run um = run("classify3 " + at("klein.json"));
  CHECK(um.code == 1);
  CHECK(contains(um.err, "Unmatched"));

  CHECK(run("classify3 " + at("missing.json")).code == 2);
}

TEST_CASE("iso3") {
  save_algebra(make_L1(2, 3), at("a.json"));
  save_algebra(make_L1(2, 3).change_basis(MatrixQ{{1, 1, 0}, {0, 1, 0}, {1, 0, 1}}), at("b.json"));
  save_algebra(make_L2(), at("c.json"));
  const Run yes = run_stable("iso3 --json " + at("a.json") + " " + at("b.json"));
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "\"isomorphic\": true"));
  const Run no = run_stable("iso3 " + at("a.json") + " " + at("c.json"));
  CHECK(no.code == 0);
  CHECK(contains(no.out, "not isomorphic"));

  save_algebra(testing::sl2_power_lie(2), at("six.json"));
  CHECK(run("iso3 " + at("a.json") + " " + at("six.json")).code == 1);
  CHECK(run("iso3 " + at("a.json") + " " + at("missing.json")).code == 2);
}
