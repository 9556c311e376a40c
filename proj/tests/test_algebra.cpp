#include <asmprism/polynomial.hpp>

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace asmprism;

namespace {

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 5), exp(0, 3), coef(-4, 4);
  Polynomial p;
  int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    p.add_term(Monomial{static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))},
               coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("monomial normalization and rendering") {
  Monomial m{3, 1, 1, 0, 0};
  CHECK(m.num_variables() == 3);
  CHECK(m == Monomial{3, 1, 1});
  CHECK(m.to_string() == "x1^3*x2*x3");
  CHECK(Monomial{}.to_string() == "1");
  CHECK(Monomial{0, 0}.is_one());
  CHECK(Monomial::variable(2, 4).to_string() == "x2^4");
  CHECK((Monomial{1} * Monomial{0, 2}).to_string() == "x1*x2^2");
}

TEST_CASE("graded lex puts higher degree first, then larger x1 exponent") {
  CHECK(Monomial{3, 2} > Monomial{3, 1, 1});
  CHECK(Monomial{0, 0, 2} > Monomial{1});
  CHECK(Monomial{1, 1} < Monomial{2});
}

TEST_CASE("poly_from_monomials") {
  CHECK(poly_from_monomials(std::vector<Monomial>{}).is_zero());
  CHECK(poly_from_monomials(std::vector<Monomial>{}).to_string() == "0");

  std::vector<Monomial> ms{Monomial{3, 1, 1}, Monomial{3, 2}};
  Polynomial p = poly_from_monomials(ms);
  CHECK(p.num_terms() == 2);
  CHECK(p.coefficient(Monomial{3, 1, 1}) == 1);
  CHECK(p.to_string() == "x1^3*x2^2 + x1^3*x2*x3");

  std::vector<Monomial> twice{Monomial{1}, Monomial{1}};
  CHECK(poly_from_monomials(twice).to_string() == "2*x1");
}

TEST_CASE("poly_add") {
  Polynomial p(Monomial{3, 2});
  CHECK(poly_add(p, Polynomial{}) == p);
  CHECK(poly_add(Polynomial(Monomial{1}), Polynomial(Monomial{1}, -1)).is_zero());
  Polynomial q = poly_add(Polynomial(Monomial{3, 2}), Polynomial(Monomial{3, 1, 1}));
  CHECK(q.to_string() == "x1^3*x2^2 + x1^3*x2*x3");
}

TEST_CASE("poly_min_total_degree") {
  Polynomial p = Polynomial(Monomial{3, 2}) + Polynomial(Monomial{3, 1, 1});
  CHECK(poly_min_total_degree(p) == 5);
  CHECK(poly_min_total_degree(Polynomial::constant(1)) == 0);
  CHECK(poly_min_total_degree(Polynomial(Monomial{1}) + Polynomial(Monomial{2})) == 1);
  CHECK_THROWS_AS(poly_min_total_degree(Polynomial{}), std::domain_error);
}

TEST_CASE("rendering of signs and constants") {
  Polynomial p = Polynomial(Monomial{1}, -2) + Polynomial::constant(3);
  CHECK(p.to_string() == "-2*x1 + 3");
  CHECK((-p).to_string() == "2*x1 - 3");
}

TEST_CASE("multiplication and evaluation") {
  Polynomial a = Polynomial(Monomial{1}) + Polynomial(Monomial{0, 1});
  Polynomial sq = a * a;
  CHECK(sq.to_string() == "x1^2 + 2*x1*x2 + x2^2");
  std::vector<Coefficient> at{2, 3};
  CHECK(sq.evaluate(at) == 25);
  CHECK(sq.evaluate_at_ones() == 4);
}

TEST_CASE("coefficients are arbitrary precision") {
  Polynomial p = Polynomial(Monomial{1}) + Polynomial::constant(1);
  Polynomial q = Polynomial::constant(1);
  for (int k = 0; k < 80; ++k) q = q * p;
  CHECK(q.evaluate_at_ones() == Coefficient(1) << 80);
}

TEST_CASE("property: addition is commutative and associative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(poly_add(p, q) == poly_add(q, p));
    CHECK(poly_add(poly_add(p, q), r) == poly_add(p, poly_add(q, r)));
    const Polynomial sum = poly_add(p, q);
    for (const auto& [m, c] : sum.terms()) CHECK(c != 0);
  }
}

TEST_CASE("property: poly_from_monomials at ones counts its inputs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 12), exp(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Monomial> ms;
    int k = len(rng);
    for (int t = 0; t < k; ++t) ms.push_back(Monomial{static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))});
    CHECK(poly_from_monomials(ms).evaluate_at_ones() == k);
  }
}
