#pragma once

#include "khb/monomial_order.hpp"
#include "khb/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace khb {

struct Term {
  Exponent exponent;
  Rational coefficient;
};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted by descending lex exponent with no zero
/// coefficients, so structural equality is polynomial equality. Orders are
/// supplied per query; the stored order is only a canonical layout.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  /// Sums like terms and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_monomial() const { return terms_.size() == 1; }
  int total_degree() const;
  Rational coefficient(const Exponent& e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned k) const;
  Polynomial mul_term(const Exponent& e, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coefficient != b.terms_[i].coefficient)
        return false;
    return true;
  }

  /// Embeds into a ring with `total` variables, placing variable i at offset + i.
  Polynomial embed(std::size_t total, std::size_t offset) const;

 private:
  void check_ring(const Polynomial& o) const;
  Polynomial& add_scaled(const Polynomial& o, const Rational& scale);

  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// The order-maximal term. Throws std::invalid_argument on the zero polynomial.
Term leading_term(const Polynomial& f, const MonomialOrder& order);
inline Exponent leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  return leading_term(f, order).exponent;
}

/// The two largest monomials (a1 > a2). Throws if f has fewer than two terms.
std::pair<Exponent, Exponent> two_leading_monomials(const Polynomial& f, const MonomialOrder& order);

/// Terms sorted by the order, largest first.
std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order);

/// f(images[0], ..., images[n-1]).
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// Human-readable form, e.g. "x1^2*x2^2 - 4*x2^3"; terms listed in the given
/// order (largest first) or lex when none is given.
std::string to_string(const Polynomial& f, const std::vector<std::string>& variable_names);
std::string to_string(const Polynomial& f, const std::vector<std::string>& variable_names, const MonomialOrder& order);

/// x1, x2, ... names.
std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem = "x");

}  // namespace khb
