#pragma once

#include "khb/matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace khb {

/// Exponent vector alpha in N^m; the monomial x^alpha.
using Exponent = std::vector<int>;

Exponent add(const Exponent& a, const Exponent& b);
bool divides(const Exponent& a, const Exponent& b);  // x^a | x^b
Exponent lcm(const Exponent& a, const Exponent& b);
/// b - a, requires divides(a, b).
Exponent quotient(const Exponent& b, const Exponent& a);
int total_degree(const Exponent& a);
IntVector difference(const Exponent& a, const Exponent& b);

/// Total, multiplicative order on N^m with 1 minimal ("maximum convention":
/// the leading term is the largest).
///
/// Every supported kind compiles to an integer matrix order: x^a > x^b iff
/// A a >lex A b. Rational weight rows are scaled by the lcm of their
/// denominators, which preserves the comparison exactly. Construction
/// rejects matrices that are not total or that put some variable below 1.
class MonomialOrder {
 public:
  enum class Kind { lex, grlex, grevlex, weight, block, valuation };

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grlex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// Compare by weight rows (lex on the weight vectors), then by tiebreak.
  static MonomialOrder weight(const RatMatrix& rows, const MonomialOrder& tiebreak);
  /// Product order on contiguous variable blocks: the first block's order
  /// decides, ties go to the next block. With a degree-compatible first
  /// block this is an elimination order for the first block's variables.
  static MonomialOrder block(const std::vector<MonomialOrder>& blocks);
  static MonomialOrder elimination(const MonomialOrder& eliminated, const MonomialOrder& kept) {
    return block({eliminated, kept});
  }
  /// Used by valuation_induced_order; rows are already the induced weights.
  static MonomialOrder induced(const RatMatrix& rows, const MonomialOrder& tiebreak);

  std::size_t nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  std::size_t nrows() const { return nrows_; }
  std::int64_t entry(std::size_t row, std::size_t var) const { return matrix_[row * nvars_ + var]; }

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  /// The compiled order vector A a; comparing these lexicographically is the order.
  std::vector<std::int64_t> key(const Exponent& a) const;

  std::string describe() const { return description_; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.nvars_ == b.nvars_ && a.nrows_ == b.nrows_ && a.matrix_ == b.matrix_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t nvars, std::vector<std::int64_t> matrix, std::string description);
  void validate() const;

  Kind kind_ = Kind::lex;
  std::size_t nvars_ = 0;
  std::size_t nrows_ = 0;
  std::vector<std::int64_t> matrix_;
  std::string description_;
};

}  // namespace khb
