#pragma once

#include "khb/groebner.hpp"
#include "khb/valuation.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace khb {

/// A residue class [f] in R/I, stored as its normal form f~ with respect to
/// a shared Groebner basis of I. Class equality is representative equality.
class QuotientElement {
 public:
  QuotientElement(std::shared_ptr<const GroebnerBasis> gb, const Polynomial& f);

  const Polynomial& representative() const { return rep_; }
  const GroebnerBasis& ideal_basis() const { return *gb_; }
  const std::shared_ptr<const GroebnerBasis>& ideal_basis_ptr() const { return gb_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
  friend bool operator==(const QuotientElement& a, const QuotientElement& b) { return a.rep_ == b.rep_; }

 private:
  std::shared_ptr<const GroebnerBasis> gb_;
  Polynomial rep_;
};

/// The class of x_i.
QuotientElement variable_class(const std::shared_ptr<const GroebnerBasis>& gb, std::size_t i);

/// lt([f]) = q(lt(f~)), an element of R/lt(I); the exponent is standard.
struct QuotientLeadTerm {
  Exponent exponent;
  Rational coefficient;
};

/// Throws std::invalid_argument on the zero class.
QuotientLeadTerm lead_term_quotient(const QuotientElement& e);

/// Multi-index over the basis (alpha_j = power of basis element j).
using MultiIndex = std::vector<int>;

/// f = sum c_alpha g^alpha + r (+ h in the quotient form, with h in I).
struct SubductionResult {
  std::map<MultiIndex, Rational> expansion;
  Polynomial remainder;
  Polynomial ideal_part;
};

/// Subduction in the ambient polynomial ring against `basis`.
SubductionResult subduction(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Subduction in R/I: f~ = sum c_alpha g~^alpha + r + h with r supported on
/// standard monomials and h in I. All elements must share one basis of I.
SubductionResult subduction_quotient(const QuotientElement& e, const std::vector<QuotientElement>& basis);

/// Checks the subduction properties on a result; returns one message per
/// violated property (empty when all hold). `gb` selects the quotient form.
std::vector<std::string> verify_subduction(const Polynomial& f, const std::vector<Polynomial>& basis,
                                           const MonomialOrder& order, const SubductionResult& result,
                                           const GroebnerBasis* gb = nullptr);

/// sum alpha_j * lead_j == target, searched depth-first with the largest
/// lead monomial (lowest index on ties) and highest multiplicity first.
std::optional<MultiIndex> factor_over_leads(const Exponent& target, const std::vector<Exponent>& leads,
                                            const MonomialOrder& order);

/// Indices i with x_i standard for the basis; {[x_i]} is then a subalgebra basis of R/I.
std::vector<std::size_t> standard_variable_set(const GroebnerBasis& G);

struct MinimalityResult {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
};

/// Drops [x_i] whenever, under the valuation-induced order whose tiebreak
/// makes x_i win ties, [x_i] subducts to zero against the remaining
/// variable classes. Candidates are scanned from the last index down.
MinimalityResult minimality_reduce(const Ideal& presentation, const std::vector<std::size_t>& basis_indices,
                                   const ValuationTable& table, const MonomialOrder& tiebreak);

/// Overload on variable classes (each representative must be a single variable).
MinimalityResult minimality_reduce(const std::vector<QuotientElement>& basis, const ValuationTable& table,
                                   const MonomialOrder& tiebreak);

}  // namespace khb
