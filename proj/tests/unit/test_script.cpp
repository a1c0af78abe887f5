#include <sstream>

#include "doctest.h"
#include "semidual/script.hpp"

using namespace semidual;

namespace {

Session run(const std::string& text) {
  Session s;
  std::istringstream in(text);
  run_script(s, in);
  return s;
}

ScriptError error_of(const std::string& text) {
  try {
    run(text);
  } catch (const ScriptError& e) {
    return e;
  }
  FAIL("no error");
  return ScriptError("", 0);
}

const char* kEx212 =
    "ring P = [Y, Z]\n"
    "map e = P -> S kernel Y^2-Y, Y*Z-Z primes (Y, Z); (Y-1, Z)\n"
    "grade-profile e\n";

}  // namespace

TEST_CASE("empty scripts") {
  Session s = run("");
  CHECK(s.records().empty());
  CHECK(s.ok());
  CHECK(run("# nothing\n\n   \n").records().empty());
}

TEST_CASE("grade profile record") {
  Session s = run(kEx212);
  REQUIRE(s.records().size() == 1);
  const json& g = s.records()[0]["result"]["grades"];
  REQUIRE(g.size() == 2);
  CHECK(g[0]["grade"] == 2);
  CHECK(g[1]["grade"] == 1);
  CHECK(s.records()[0]["result"]["ext_degrees"] == json::array({-2, -1}));
  CHECK(s.records()[0]["schema"] == 1);
}

TEST_CASE("gdim over the graded model") {
  Session s = run(
      "ring R = [Y, Z] / Y^2, Y*Z\n"
      "module X = cyclic R / Y\n"
      "complex D = dualizing R\n"
      "gdim D X expect value=-1 ab_check.ok=true\n"
      "gdim D D expect value=0\n"
      "bounds D expect inf=0 sup=1\n");
  REQUIRE(s.records().size() == 3);
  CHECK(s.records()[0]["result"]["value"] == -1);
  CHECK(s.ok());
}

TEST_CASE("expectations") {
  Session s = run("ring R = [X]\nmodule M = cyclic R / X\ndepth M expect depth=0\ndepth M expect depth=1\n");
  CHECK(s.records()[0]["pass"] == true);
  CHECK(s.records()[1]["pass"] == false);
  CHECK(!s.ok());
  CHECK(s.records()[1]["expect"][0]["actual"] == "0");
}

TEST_CASE("suites and fuzz from scripts") {
  Session s = run("suite ex2_12\nfuzz lem2_2 5 3\n");
  CHECK(s.ok());
  CHECK(s.records()[1]["result"]["passed"] == 5);
  ScriptError e = error_of("suite nope\n");
  CHECK(e.binding == "nope");
  CHECK(error_of("fuzz nope 3\n").binding == "nope");
}

TEST_CASE("errors carry positions and names") {
  ScriptError p = error_of("ring R = [X, Y]\nmodule M = cyclic R / X + * Y\n");
  CHECK(p.line == 2);
  CHECK(p.column == 27);
  ScriptError d = error_of("ring R = [X]\nring R = [Y]\n");
  CHECK(d.line == 2);
  CHECK(d.binding == "R");
  ScriptError u = error_of("ring R = [X]\ngdim C R\n");
  CHECK(u.binding == "C");
  ScriptError k = error_of("ring R = [X]\nmap f = R -> S kernel X\nbounds f\n");
  CHECK(k.binding == "f");
  CHECK(error_of("frobnicate\n").line == 1);
}

TEST_CASE("base change statements") {
  Session s = run(
      "ring A = [X, Y, Z] / Y^2, Y*Z\n"
      "map phi = A -> S kernel X\n"
      "complex D = dualizing A\n"
      "pd phi expect value=1\n"
      "basechange D phi expect target.inf=1 target.amp=1 inf_ok=true\n"
      "cobase D phi expect target.inf=0\n"
      "series D phi 4 expect poincare_ok=true bass_ok=true\n"
      "complex E = basechange D phi\n"
      "semidual E expect verdict=yes\n");
  for (auto& r : s.records()) CHECK_MESSAGE(r["pass"] == true, r.dump());
}

TEST_CASE("reruns are byte-identical") {
  std::string text = std::string(kEx212) + "fuzz ab 10 11\n";
  CHECK(run(text).report().dump() == run(text).report().dump());
}
