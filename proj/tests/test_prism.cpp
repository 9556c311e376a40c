#include "fixtures.hpp"
#include "oracles.hpp"

#include <asmprism/perm.hpp>
#include <asmprism/prism.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace asmprism;
using namespace fixtures;

namespace {

// The three fillings of the biGrassmannian shape of diagram_example().
PrismTableau bigr_tableau(std::vector<std::vector<int>> pink) {
  return {{Rssyt(Partition{3}, 1, {{1, 1, 1}}), Rssyt(Partition{1, 1}, 2, {{2}, {1}}),
           Rssyt(Partition{1, 1}, 3, std::move(pink))}};
}

// The six fillings of the parabolic shape of diagram_example().
PrismTableau parabolic_tableau(std::vector<std::vector<int>> blue, std::vector<std::vector<int>> pink) {
  return {{Rssyt(Partition{3}, 1, {{1, 1, 1}}), Rssyt(Partition{2, 1}, 2, std::move(blue)),
           Rssyt(Partition{1, 1}, 3, std::move(pink))}};
}

}  // namespace

TEST_CASE("enumerate_rssyt") {
  auto one = enumerate_rssyt(Partition{1}, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0].rows() == std::vector<std::vector<int>>{{1}});
  CHECK(one[1].rows() == std::vector<std::vector<int>>{{2}});
  auto row = enumerate_rssyt(Partition{2}, 1);
  REQUIRE(row.size() == 1);
  CHECK(row[0].rows() == std::vector<std::vector<int>>{{1, 1}});
  auto col = enumerate_rssyt(Partition{1, 1}, 2);
  REQUIRE(col.size() == 1);
  CHECK(col[0].rows() == std::vector<std::vector<int>>{{2}, {1}});
  CHECK_THROWS_AS(enumerate_rssyt(Partition{1, 1, 1}, 2), ValidationError);
  CHECK(enumerate_rssyt(Partition{}, 3).size() == 1);
}

TEST_CASE("Rssyt validation and grid placement") {
  CHECK_THROWS_AS(Rssyt(Partition{2}, 2, {{1, 2}}), ValidationError);
  CHECK_THROWS_AS(Rssyt(Partition{1, 1}, 2, {{1}, {1}}), ValidationError);
  CHECK_THROWS_AS(Rssyt(Partition{1}, 2, {{3}}), ValidationError);
  const Rssyt t(Partition{3, 2}, 5, {{3, 2, 2}, {1, 1}});
  CHECK(t.occupies(5, 3));
  CHECK(t.occupies(4, 2));
  CHECK_FALSE(t.occupies(4, 3));
  CHECK_FALSE(t.occupies(3, 1));
  CHECK(t.at(5, 1) == 3);
  CHECK(t.at(4, 1) == 1);
  CHECK(t.accepts(4, 2, 2) == false);
  CHECK(t.accepts(5, 3, 1));
}

TEST_CASE("prism_weight") {
  CHECK(prism_weight(prism_example_tableau()) == Monomial{3, 2, 3, 0, 0, 1});
  CHECK(prism_weight(bigr_tableau({{3}, {2}})) == Monomial{3, 1, 1});
  PrismTableau empty{{Rssyt(Partition{}, 2, {})}};
  CHECK(prism_weight(empty).is_one());
  CHECK(prism_weight(PrismTableau{}).is_one());
}

TEST_CASE("has_unstable_triple") {
  CHECK(has_unstable_triple(bigr_tableau({{3}, {1}})));
  CHECK_FALSE(has_unstable_triple(bigr_tableau({{3}, {2}})));
  CHECK_FALSE(has_unstable_triple(bigr_tableau({{2}, {1}})));
  // One component: every antidiagonal carries a single label.
  CHECK_FALSE(has_unstable_triple(PrismTableau{{Rssyt(Partition{2, 1}, 3, {{3, 2}, {1}})}}));
}

TEST_CASE("biGrassmannian model of the diagram example") {
  const auto spec = bigrassmannian_model(diagram_example());
  CHECK(spec.lambdas == std::vector<Partition>{Partition{3}, Partition{1, 1}, Partition{1, 1}});
  CHECK(spec.depths == std::vector<int>{1, 2, 3});
  CHECK(enumerate_all_prism(spec).size() == 3);
  auto prism = prism_set(spec);
  std::sort(prism.begin(), prism.end());
  std::vector<PrismTableau> expected{bigr_tableau({{3}, {2}}), bigr_tableau({{2}, {1}})};
  std::sort(expected.begin(), expected.end());
  CHECK(prism == expected);
  CHECK(asm_polynomial(spec).to_string() == "x1^3*x2^2 + x1^3*x2*x3");
}

TEST_CASE("parabolic model of the diagram example") {
  const auto spec = parabolic_model(diagram_example());
  CHECK(spec.lambdas == std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1}});
  CHECK(spec.depths == std::vector<int>{1, 2, 3});
  const auto all = enumerate_all_prism(spec);
  CHECK(all.size() == 6);

  const std::vector<PrismTableau> t{
      parabolic_tableau({{2, 2}, {1}}, {{3}, {2}}), parabolic_tableau({{2, 2}, {1}}, {{3}, {1}}),
      parabolic_tableau({{2, 2}, {1}}, {{2}, {1}}), parabolic_tableau({{2, 1}, {1}}, {{3}, {2}}),
      parabolic_tableau({{2, 1}, {1}}, {{3}, {1}}), parabolic_tableau({{2, 1}, {1}}, {{2}, {1}})};
  for (const auto& x : t) CHECK(std::count(all.begin(), all.end(), x) == 1);
  const std::vector<Monomial> wt{Monomial{3, 2, 1}, Monomial{3, 2, 1}, Monomial{3, 2},
                                 Monomial{3, 1, 1}, Monomial{3, 1, 1}, Monomial{3, 2}};
  for (std::size_t k = 0; k < 6; ++k) CHECK(prism_weight(t[k]) == wt[k]);
  CHECK(prism_degree(spec) == 5);
  CHECK_FALSE(has_unstable_triple(t[2]));
  CHECK_FALSE(has_unstable_triple(t[3]));
  CHECK(has_unstable_triple(t[4]));
  CHECK(has_unstable_triple(t[5]));

  const auto prism = prism_set(spec);
  CHECK(prism.size() == 2);
  CHECK(std::count(prism.begin(), prism.end(), t[2]) == 1);
  CHECK(std::count(prism.begin(), prism.end(), t[3]) == 1);
  CHECK(asm_polynomial(spec).to_string() == "x1^3*x2^2 + x1^3*x2*x3");
}

TEST_CASE("models of the noneqi example and the identity") {
  const PrismShapeSpec expected{{Partition{2}, Partition{2}}, {1, 2}};
  CHECK(bigrassmannian_model(noneqi_example()) == expected);
  CHECK(parabolic_model(noneqi_example()) == expected);
  CHECK(asm_of_spec(expected) == noneqi_example());
  CHECK(bigrassmannian_model(Asm::identity(4)).num_components() == 0);
  CHECK(parabolic_model(Asm::identity(4)).num_components() == 0);
  CHECK(enumerate_all_prism(PrismShapeSpec{}).size() == 1);
  CHECK(asm_polynomial(PrismShapeSpec{}) == Polynomial::constant(1));
}

TEST_CASE("single shapes give Schur polynomials") {
  CHECK(asm_polynomial(PrismShapeSpec{{Partition{1}}, {2}}).to_string() == "x1 + x2");
}

TEST_CASE("property: single-shape specs match the semistandard tableau Schur polynomial") {
  for (int d = 1; d <= 3; ++d) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= a; ++b) {
        for (int c = 0; c <= b; ++c) {
          Partition lambda{a, b, c};
          if (lambda.length() > d) continue;
          CHECK(asm_polynomial(PrismShapeSpec{{lambda}, {d}}) == oracle::schur_by_ssyt(lambda, d));
        }
      }
    }
  }
}

TEST_CASE("property: both models recover A and have degree deg(A) on ASM(4)") {
  for (const auto& a : enumerate_asms(4)) {
    const int d = deg(a);
    for (const auto& spec : {bigrassmannian_model(a), parabolic_model(a)}) {
      CHECK(asm_of_spec(spec, 4) == a);
      CHECK(prism_degree(spec) == static_cast<unsigned>(d));
      for (const auto& t : prism_set(spec)) CHECK(prism_weight(t).total_degree() == static_cast<unsigned>(d));
    }
    CHECK(asm_polynomial(bigrassmannian_model(a)) == asm_polynomial(parabolic_model(a)));
  }
}

TEST_CASE("property: A <= B iff every lambda^{(A,i)} lies in lambda^{(B,i)}") {
  const auto all = enumerate_asms(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      bool contained = true;
      for (int i = 1; i <= 4; ++i) contained = contained && lambda_row(a, i).contained_in(lambda_row(b, i));
      CHECK(asm_leq(a, b) == contained);
    }
  }
}

TEST_CASE("property: prism_weight ignores component order") {
  std::mt19937 rng(9);
  for (const auto& a : enumerate_asms(4)) {
    const auto all = enumerate_all_prism(parabolic_model(a));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int s = 0; s < 3; ++s) {
      PrismTableau t = all[pick(rng)];
      const Monomial w = prism_weight(t);
      std::sort(t.components.begin(), t.components.end());
      do {
        CHECK(prism_weight(t) == w);
      } while (std::next_permutation(t.components.begin(), t.components.end()));
    }
  }
}
