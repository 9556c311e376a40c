#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace asmprism {

using Coefficient = boost::multiprecision::cpp_int;

// x_1^{e_1} x_2^{e_2} ... with trailing zero exponents dropped, so equal
// monomials always have equal storage.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  // x_index^power, index is 1-based.
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t index) const noexcept;
  std::span<const unsigned> exponents() const noexcept { return exponents_; }
  std::size_t num_variables() const noexcept { return exponents_.size(); }
  unsigned total_degree() const noexcept;
  bool is_one() const noexcept { return exponents_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  // "x1^3*x2*x3"; the unit monomial renders as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded lexicographic: total degree first, then exponent vectors
  // compared lexicographically from x_1.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  void normalize();
  std::vector<unsigned> exponents_;
};

// Sparse polynomial in x_1, x_2, ... with arbitrary precision integer
// coefficients. Terms iterate highest first in graded lex order.
class Polynomial {
 public:
  struct Greater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
  };
  using Terms = std::map<Monomial, Coefficient, Greater>;

  Polynomial() = default;
  Polynomial(const Monomial& m, Coefficient c = 1);
  static Polynomial constant(Coefficient c);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  Coefficient coefficient(const Monomial& m) const;

  // Minimum total degree over the terms. Throws std::domain_error on zero.
  unsigned min_total_degree() const;
  unsigned max_total_degree() const;

  // Substitute integer values for x_1..x_k; missing variables evaluate to 0.
  Coefficient evaluate(std::span<const Coefficient> values) const;
  // Sum of coefficients, i.e. evaluation at all ones.
  Coefficient evaluate_at_ones() const;

  void add_term(const Monomial& m, const Coefficient& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);

  // Terms joined by " + ", e.g. "x1^3*x2^2 + 2*x1^3*x2*x3"; zero is "0".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

// Sum of the monomials counted with multiplicity.
Polynomial poly_from_monomials(std::span<const Monomial> monomials);
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
unsigned poly_min_total_degree(const Polynomial& p);

}  // namespace asmprism
