#include "asmprism/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asmprism {

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) { normalize(); }

Monomial::Monomial(std::initializer_list<unsigned> exponents) : exponents_(exponents) { normalize(); }

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index == 0) throw std::out_of_range("variables are numbered from 1");
  std::vector<unsigned> e(index, 0);
  e[index - 1] = power;
  return Monomial(std::move(e));
}

void Monomial::normalize() {
  while (!exponents_.empty() && exponents_.back() == 0) exponents_.pop_back();
}

unsigned Monomial::exponent(std::size_t index) const noexcept {
  return (index >= 1 && index <= exponents_.size()) ? exponents_[index - 1] : 0;
}

unsigned Monomial::total_degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.exponents_.size() > exponents_.size()) exponents_.resize(other.exponents_.size(), 0);
  for (std::size_t i = 0; i < other.exponents_.size(); ++i) exponents_[i] += other.exponents_[i];
  normalize();
  return *this;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (exponents_[i] != 1) os << '^' << exponents_[i];
  }
  return os.str();
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  std::size_t n = std::max(a.exponents_.size(), b.exponents_.size());
  for (std::size_t i = 1; i <= n; ++i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(const Monomial& m, Coefficient c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

Polynomial Polynomial::constant(Coefficient c) { return Polynomial(Monomial{}, std::move(c)); }

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

unsigned Polynomial::min_total_degree() const {
  if (is_zero()) throw std::domain_error("undefined degree: zero polynomial");
  unsigned best = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) best = std::min(best, m.total_degree());
  return best;
}

unsigned Polynomial::max_total_degree() const {
  if (is_zero()) throw std::domain_error("undefined degree: zero polynomial");
  return terms_.begin()->first.total_degree();
}

Coefficient Polynomial::evaluate(std::span<const Coefficient> values) const {
  Coefficient total = 0;
  for (const auto& [m, c] : terms_) {
    Coefficient t = c;
    for (std::size_t i = 0; i < m.num_variables() && t != 0; ++i) {
      unsigned e = m.exponents()[i];
      if (e == 0) continue;
      if (i >= values.size()) {
        t = 0;
        break;
      }
      t *= boost::multiprecision::pow(values[i], e);
    }
    total += t;
  }
  return total;
}

Coefficient Polynomial::evaluate_at_ones() const {
  Coefficient total = 0;
  for (const auto& [m, c] : terms_) total += c;
  return total;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) r.terms_.emplace(ma * m, ca);
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coefficient mag = c < 0 ? Coefficient(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

Polynomial poly_from_monomials(std::span<const Monomial> monomials) {
  Polynomial p;
  for (const auto& m : monomials) p.add_term(m, 1);
  return p;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

unsigned poly_min_total_degree(const Polynomial& p) { return p.min_total_degree(); }

}  // namespace asmprism
