#pragma once

#include "khb/matrix.hpp"
#include "khb/monomial_order.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace khb {

/// Total order on Q^r: a < b iff order_matrix*a <lex order_matrix*b.
class ValueOrder {
 public:
  explicit ValueOrder(RatMatrix order_matrix);
  static ValueOrder lex(std::size_t r) { return ValueOrder(RatMatrix::identity(r)); }

  std::size_t rank() const { return matrix_.rows(); }
  const RatMatrix& matrix() const { return matrix_; }
  std::strong_ordering compare(const RatVector& a, const RatVector& b) const;

 private:
  RatMatrix matrix_;
};

/// The values nu(g_i) of a presentation's generators.
///
/// Column i of N is nu(g_i); the valuation of a monomial image is
/// nu(pi(x^a)) = N a. When degrees are present the table describes a graded
/// algebra and values compare as (deg, N a) with larger degree being the
/// smaller value.
struct ValuationTable {
  RatMatrix N;
  ValueOrder value_order;
  std::optional<IntVector> degrees;

  ValuationTable(RatMatrix n, ValueOrder order, std::optional<IntVector> d = std::nullopt);

  std::size_t rank() const { return N.rows(); }
  std::size_t generators() const { return N.cols(); }

  RatVector value(const Exponent& a) const;
  /// Degree of pi(x^a); requires degrees.
  Integer degree(const Exponent& a) const;
  /// Full comparison including the degree coordinate when graded.
  std::strong_ordering compare_values(const Exponent& a, const Exponent& b) const;
  bool same_value(const Exponent& a, const Exponent& b) const;
};

/// x^a > x^b iff nu(pi(x^a)) < nu(pi(x^b)), ties broken by `tiebreak`.
MonomialOrder valuation_induced_order(const ValuationTable& table, const MonomialOrder& tiebreak);

}  // namespace khb
