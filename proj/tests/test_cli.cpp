#include <cli.hpp>

#include <doctest.h>

#include <algorithm>
#include <sstream>

using asmprism::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string diagram_example = "0 0 0 1\n0 1 0 0\n1 -1 1 0\n0 1 0 0\n";
const std::string noneqi_example = "0 0 1 0\n1 0 -1 1\n0 1 0 0\n0 0 1 0\n";

}  // namespace

TEST_CASE("poly under every model") {
  for (const std::string model : {"parabolic", "bigr", "schubert-sum", "multidegree"}) {
    const auto r = invoke({"poly", "--model", model}, diagram_example);
    CHECK(r.code == 0);
    CHECK(r.out == "x1^3*x2^2 + x1^3*x2*x3\n");
  }
  CHECK(invoke({"poly", "--model", "multidegree"}, noneqi_example).out == "x1^3\n");
}

TEST_CASE("count") {
  CHECK(invoke({"count", "4"}).out == "42\n");
  CHECK(invoke({"count", "5", "--format", "structured"}).out == "{\"count\":429,\"n\":5}\n");
}

TEST_CASE("verify verbs") {
  for (const std::string check : {"theorem1", "bijection"}) {
    const auto r = invoke({"verify", check, "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "OK: 7/7 ASMs, both models\n");
  }
  for (const std::string check : {"groebner", "lattice"}) {
    const auto r = invoke({"verify", check, "--n", "3", "--jobs", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "OK: 7/7 ASMs\n");
  }
  CHECK(invoke({"verify", "schur", "--n", "2"}).code == 0);
  CHECK(invoke({"verify", "theorem1", "--n", "9"}).code == 1);
}

TEST_CASE("output does not depend on --jobs") {
  CHECK(invoke({"verify", "lattice", "--n", "4", "--jobs", "1"}).out ==
        invoke({"verify", "lattice", "--n", "4", "--jobs", "3"}).out);
}

TEST_CASE("permutation sets and degree") {
  CHECK(invoke({"perm-set"}, noneqi_example).out == "3 4 1 2\n4 1 2 3\n");
  CHECK(invoke({"min-perm"}, noneqi_example).out == "4 1 2 3\n");
  CHECK(invoke({"deg"}, noneqi_example).out == "3\n");
}

TEST_CASE("ideal and facets") {
  CHECK(invoke({"ideal", "--init"}, noneqi_example).out == "z[1][1]\nz[1][2]\nz[1][3]*z[2][1]\nz[1][3]*z[2][2]\n");
  const auto facets = invoke({"facets", "--max"}, noneqi_example);
  CHECK(facets.out == "# 4 1 2 3  x1^3\n+++.\n....\n....\n....\n");
  const auto lines = invoke({"ideal", "--facets", "--format", "structured"}, noneqi_example).out;
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
}

TEST_CASE("diagram, essential set, triangle, completion") {
  CHECK(invoke({"diagram"}, noneqi_example).out == "##..\n..#.\n....\n....\n");
  CHECK(invoke({"essential"}, noneqi_example).out == "(1,2) r=0\n(2,3) r=1\n");
  CHECK(invoke({"triangle"}, noneqi_example).out == "3\n1 4\n1 2 4\n1 2 3 4\n");
  CHECK(invoke({"complete"}, "0 0\n0 1\n").out == "0 0 1\n0 1 0\n1 0 0\n");
}

TEST_CASE("prism list") {
  const auto r = invoke({"prism", "list", "--model", "bigr", "--all", "-v"}, noneqi_example);
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), 't') >= 3);
  CHECK(r.out.find("tableau 3") != std::string::npos);
  CHECK(r.out.find("weight: x1^3") != std::string::npos);
}

TEST_CASE("errors") {
  const auto bad = invoke({"deg"}, "1 0\n0 x\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2, column 3") != std::string::npos);
  CHECK(invoke({"deg"}, "1 1\n0 0\n").code == 1);
  CHECK(invoke({"deg", "--asm", "/nonexistent/file"}).code == 1);
  CHECK(invoke({"poly", "--model", "nope"}, diagram_example).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical output") {
  CHECK(invoke({"facets"}, diagram_example).out == invoke({"facets"}, diagram_example).out);
}
