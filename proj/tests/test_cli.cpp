#include "gen.hpp"

#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace kdim;
using testgen::Gen;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string atoms() { return testgen::data_path("atoms.json"); }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("eval and decompose") {
  CHECK(run({"eval", "(T+L)^2"}).out == "T^2+2*T*L+L^2\n");
  CHECK(run({"eval", "D(L)"}).out == "T\n");
  CHECK(run({"eval", "-L^2+T"}).out == "T-L^2\n");
  CHECK(run({"decompose", "-T"}).code == kExitOk);
  CHECK(run({"eval", "blowup(P(2), 1, 2)"}).out == "T^2+2*T*L+L^2\n");
  CHECK(run({"eval", "pbundle(P1, 2)"}).out == "T^2+2*T*L+L^2\n");
  const Run d = run({"decompose", "T^2"});
  CHECK(d.code == kExitOk);
  CHECK(contains(d.out, "pi1 = -T*L\n"));
  CHECK(contains(d.out, "pi2 = T+L\n"));
  CHECK(contains(d.out, "D = L^2\n"));
  CHECK(run({"--atoms", atoms(), "eval", "K3*Q - Q*K3"}).out == "0\n");
}

TEST_CASE("zeta, hankel and certify") {
  const Run z = run({"zeta", "P1", "--N", "12", "--hankel", "2", "20"});
  REQUIRE(z.code == kExitOk);
  std::string all;
  for (int m = 0; m <= 20; ++m) all += " " + std::to_string(m);
  CHECK(contains(z.out, "j=2 vanishing m:" + all + "\n"));
  CHECK(contains(z.out, "classification: rational-consistent"));

  CHECK(run({"zeta", "0", "--N", "5"}).out == "Z(t) = 1 + O(t^6)\n");

  const Run c = run({"zeta", "--certify", "2", "--j", "1"});
  CHECK(c.code == kExitOk);
  CHECK(contains(c.out, "certificate h=2 j=1: true"));
  CHECK(contains(c.out, "det(m=1) = [8]-[9]"));
  CHECK(contains(run({"certify", "2", "--j", "1"}).out, "det(m=1) = [8]-[9]  [collapse -1]"));

  CHECK(run({"hankel", "P(1)", "--j", "2", "--m", "3"}).out == "det(m=3, j=2) = 0\n");
  CHECK(run({"hankel", "P(1)", "--j", "1", "--m", "2"}).out == "det(m=2, j=1) = -T^3*L^3\n");
  const Run mu = run({"--atoms", atoms(), "zeta", "E", "--N", "3", "--measure", "mu", "--d", "2"});
  CHECK(mu.code == kExitOk);
}

TEST_CASE("geometry subcommands") {
  CHECK(contains(run({"brieskorn", "2", "2", "2", "4"}).out, "NOT-RHM witness (1,1,1,2)"));
  CHECK(run({"brieskorn", "2", "2", "2", "5"}).out == "RHM\n");

  const Run g = run({"--atoms", atoms(), "glue", testgen::data_path("hirzebruch_F0.json"),
                     testgen::data_path("hirzebruch_F1.json")});
  CHECK(g.code == kExitOk);
  CHECK(contains(g.out, "verdict: EQUAL"));
  CHECK(contains(g.out, "T^2+2*T*L+L^2"));
  const Run sep = run({"--atoms", atoms(), "glue", testgen::data_path("boundary_quadric.json"),
                       testgen::data_path("boundary_plane.json")});
  CHECK(contains(sep.out, "SEPARATED(Hodge-Deligne)"));
  const Run cusp = run({"--atoms", atoms(), "glue", testgen::data_path("cusp.json"), "--isolated", "0"});
  CHECK(contains(cusp.out, "EQUAL"));

  const Run t = run({"toric", testgen::data_path("a1_cone.json")});
  CHECK(t.code == kExitOk);
  CHECK(contains(t.out, "face {0,1}: p = T*L symmetric"));
  CHECK(contains(t.out, "verdict: D-singular (certified)"));
  const Run tr = run({"toric", testgen::data_path("a1_cone.json"), testgen::data_path("a1_resolution.json")});
  CHECK(contains(tr.out, "verdict: D-singular (certified)"));
}

TEST_CASE("measures") {
  const Run m = run({"--atoms", atoms(), "measure", "Q"});
  CHECK(m.code == kExitOk);
  CHECK(contains(m.out, "Hodge-Deligne: u^2*v^2+2*u*v+1"));
  CHECK(contains(m.out, "point-count: q^2+2*q+1"));
  CHECK(contains(m.out, "birational: [Rat^2]"));
  CHECK(run({"measure", "P(2)", "--measure", "count", "--q", "2"}).out == "7\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "T"}).code == kExitOk);
  CHECK(run({"bogus"}).code == kExitError);
  CHECK(run({}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);
  const Run p = run({"eval", "T+"});
  CHECK(p.code == kExitParse);
  CHECK(contains(p.err, "parse error"));
  CHECK(run({"eval", "Foo"}).code == kExitUnknownAtom);
  CHECK(run({"--atoms", atoms(), "eval", "Nope*Q"}).code == kExitUnknownAtom);
  CHECK(run({"--atoms", atoms(), "zeta", "K3", "--N", "3"}).code == kExitMissingSym);
  CHECK(run({"--atoms", atoms(), "zeta", "K3*Q", "--N", "3"}).code == kExitMissingSym);
  CHECK(run({"--atoms", atoms(), "measure", "K3", "--measure", "count"}).code == kExitMissingMeasure);
  CHECK(run({"--atoms", "/nonexistent/atoms.json", "eval", "T"}).code == kExitError);
  CHECK(run({"brieskorn", "1", "2"}).code == kExitError);
  CHECK(run({"toric", "/nonexistent/fan.json"}).code == kExitError);
}

TEST_CASE("json output is parseable and deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "eval", "(T+L)^2"},
      {"--json", "decompose", "T^3"},
      {"--json", "zeta", "P1", "--N", "4", "--hankel", "2", "4"},
      {"--json", "zeta", "--certify", "3", "--j", "2"},
      {"--json", "brieskorn", "2", "3", "5"},
      {"--json", "--atoms", atoms(), "glue", testgen::data_path("two_divisors.json")},
      {"--json", "toric", testgen::data_path("weighted_p2_fan.json")},
      {"--json", "--atoms", atoms(), "measure", "Q"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd.back());
    const Run a = run(cmd), b = run(cmd);
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK_NOTHROW((void)nlohmann::json::parse(a.out));
  }
  const auto j = nlohmann::json::parse(run({"--json", "decompose", "T^2"}).out);
  CHECK(j.at("pi1") == "-T*L");
  CHECK(j.at("pi2") == "T+L");
  const auto b = nlohmann::json::parse(run({"--json", "brieskorn", "2", "2", "2", "4"}).out);
  CHECK(b.at("rhm") == false);
  CHECK(b.at("witness") == nlohmann::json::array({1, 1, 1, 2}));
}

TEST_CASE("atom table from the environment") {
  ::setenv("MOTIVIC_ATOMS", atoms().c_str(), 1);
  const Run r = run({"eval", "Q + K3"});
  ::unsetenv("MOTIVIC_ATOMS");
  CHECK(r.code == kExitOk);
  CHECK(r.out == "K3+Q\n");
  CHECK(run({"eval", "Q + K3"}).code == kExitUnknownAtom);
}

TEST_CASE("parser fuzzing never crashes") {
  const std::vector<std::string> tokens{"T", "L", "1", "2", "3", "0", "-", "+", "*", "^", "(", ")", "P(", "D(",
                                        ",", "Q", "K3", "E", "blowup(", "pbundle(", "P1", " ", "x", "#"};
  Gen g(61);
  for (int trial = 0; trial < 1500; ++trial) {
    std::string s;
    int powers = 0;
    const long len = g.range(0, 20);
    for (long i = 0; i < len; ++i) {
      const std::string& tok = tokens[static_cast<std::size_t>(g.range(0, static_cast<long>(tokens.size()) - 1))];
      if (tok == "^" && ++powers > 2) continue;
      s += tok;
    }
    CAPTURE(s);
    const std::string cmd = g.coin() ? "eval" : "decompose";
    const Run r = run({"--atoms", atoms(), cmd, s});
    CHECK((r.code == kExitOk || r.code == kExitParse || r.code == kExitUnknownAtom || r.code == kExitError));
    if (r.code == kExitOk) {
      CHECK(r.err.empty());
      if (cmd == "eval") {
        std::string printed = r.out.substr(0, r.out.size() - 1);
        CHECK(run({"--atoms", atoms(), "eval", printed}).out == r.out);
      }
    } else {
      CHECK_FALSE(r.err.empty());
    }
  }
}
