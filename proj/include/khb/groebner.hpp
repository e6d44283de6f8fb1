#pragma once

#include "khb/monomial_order.hpp"
#include "khb/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace khb {

/// An ideal given by generators in a polynomial ring with nvars variables.
struct Ideal {
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(std::size_t n, std::vector<Polynomial> gens);
  bool is_zero() const { return generators.empty(); }
};

/// Reduced Groebner basis under a fixed order: monic, auto-reduced, sorted
/// by leading monomial (ascending).
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Exponent>& leading_monomials() const { return leading_; }
  std::size_t nvars() const { return order_.nvars(); }
  std::size_t size() const { return elements_.size(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  int max_degree() const;
  Ideal ideal() const { return Ideal(nvars(), elements_); }

 private:
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Exponent> leading_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, then pair index) and the Gebauer-Moeller criteria.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

/// The remainder of f on division by G: f - NF(f) lies in the ideal and no
/// term of NF(f) is divisible by a leading monomial of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

inline bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) { return normal_form(f, G).is_zero(); }

bool is_standard_monomial(const Exponent& a, const GroebnerBasis& G);

/// Standard monomials of total degree <= bound, ascending in the basis order.
std::vector<Exponent> standard_monomials_up_to(const GroebnerBasis& G, int degree_bound);

/// Every exponent in nvars variables with total degree <= bound, graded then lex.
std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree_bound);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// True iff every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

/// Kernel of x_i -> targets[i], as a reduced Groebner basis under
/// source_order. Computed by eliminating the target variables from
/// <x_i - g_i> under the block order (grevlex on targets) >> source_order.
GroebnerBasis kernel_groebner(const std::vector<Polynomial>& targets, const MonomialOrder& source_order);

/// Same kernel as an ideal (generators = reduced basis under grevlex).
Ideal kernel_of_map(const std::vector<Polynomial>& targets, std::size_t source_nvars);

}  // namespace khb
