#include "fixtures.hpp"
#include "oracles.hpp"

#include <asmprism/ideal.hpp>
#include <asmprism/pipedream.hpp>

#include <doctest.h>

#include <set>

using namespace asmprism;
using namespace fixtures;

namespace {

std::vector<std::string> rendered(const auto& items) {
  std::vector<std::string> out;
  for (const auto& x : items) out.push_back(x.to_string());
  return out;
}

}  // namespace

TEST_CASE("minor and monomial rendering") {
  CHECK(MinorSpec{{1}, {2}, {1, 2}}.to_string() == "z[1][2]");
  CHECK(MinorSpec{{1, 2}, {1, 3}, {2, 3}}.to_string() == "|z[1][1] z[1][3]; z[2][1] z[2][3]|");
  CHECK(SquareFreeMonomial{GridSet(4, {{1, 3}, {2, 1}})}.to_string() == "z[1][3]*z[2][1]");
  CHECK(SquareFreeMonomial{GridSet(4)}.to_string() == "1");
}

TEST_CASE("antidiagonal initial terms") {
  CHECK(antidiagonal_init(MinorSpec{{1, 2}, {1, 3}, {2, 3}}, 4).support == GridSet(4, {{1, 3}, {2, 1}}));
  CHECK(antidiagonal_init(MinorSpec{{1, 2, 4}, {1, 2, 3}, {4, 3}}, 4).support == GridSet(4, {{1, 3}, {2, 2}, {4, 1}}));
}

TEST_CASE("generators of the noneqi example") {
  const Asm a = noneqi_example();
  CHECK(rendered(essential_generators(a)) ==
        std::vector<std::string>{"z[1][1]", "z[1][2]", "|z[1][1] z[1][2]; z[2][1] z[2][2]|",
                                 "|z[1][1] z[1][3]; z[2][1] z[2][3]|", "|z[1][2] z[1][3]; z[2][2] z[2][3]|"});
  const auto init = initial_ideal(a);
  const auto names = rendered(init);
  const std::set<std::string> got(names.begin(), names.end());
  CHECK(got == std::set<std::string>{"z[1][1]", "z[1][2]", "z[1][3]*z[2][1]", "z[1][3]*z[2][2]"});
  CHECK(multidegree(a) == Polynomial(Monomial{3}));

  const auto sr = stanley_reisner_facets(init, 4);
  std::set<GridSet> planes;
  for (const auto& f : sr.facets) planes.insert(f.complement());
  CHECK(planes == std::set<GridSet>{GridSet(4, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}), GridSet(4, {{1, 1}, {1, 2}, {1, 3}})});
  CHECK(max_dimensional(sr) == std::vector<GridSet>{GridSet(4, {{1, 1}, {1, 2}, {1, 3}}).complement()});
}

TEST_CASE("minimalize") {
  const SquareFreeMonomial x{GridSet(3, {{1, 1}})};
  const SquareFreeMonomial xy{GridSet(3, {{1, 1}, {2, 2}})};
  const SquareFreeMonomial y{GridSet(3, {{3, 3}})};
  CHECK(minimalize({xy, x, y, x}) == std::vector<SquareFreeMonomial>{x, y});
  CHECK(minimalize({}).empty());
}

TEST_CASE("identity has the zero ideal") {
  CHECK(essential_generators(Asm::identity(3)).empty());
  const auto sr = stanley_reisner_facets({}, 3);
  CHECK(sr.facets == std::vector<GridSet>{GridSet::full(3)});
  CHECK(multidegree(Asm::identity(3)) == Polynomial::constant(1));
}

TEST_CASE("property: essential and defining generators give the same initial ideal") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_asms(n)) CHECK(initial_ideal(a) == initial_ideal_from_all_minors(a));
  }
}

TEST_CASE("property: transversal search matches brute force and the subword complex") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_asms(n)) {
      const auto init = initial_ideal(a);
      const auto sr = stanley_reisner_facets(init, n);
      CHECK(std::set<GridSet>(sr.facets.begin(), sr.facets.end()) == oracle::sr_facets_by_brute_force(init, n));
      std::set<GridSet> from_pipes;
      for (const auto& p : delta_facets(a)) from_pipes.insert(p.complement());
      CHECK(std::set<GridSet>(sr.facets.begin(), sr.facets.end()) == from_pipes);
      CHECK(multidegree(a) == asm_polynomial(parabolic_model(a)));
    }
  }
}
