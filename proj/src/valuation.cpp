#include "khb/valuation.hpp"

#include <stdexcept>

namespace khb {

ValueOrder::ValueOrder(RatMatrix order_matrix) : matrix_(std::move(order_matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("value order matrix must be square");
  if (khb::rank(matrix_) != matrix_.rows()) throw std::invalid_argument("value order matrix must be nonsingular");
}

std::strong_ordering ValueOrder::compare(const RatVector& a, const RatVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw std::invalid_argument("ValueOrder::compare: rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += matrix_(i, j) * (a[j] - b[j]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ValuationTable::ValuationTable(RatMatrix n, ValueOrder order, std::optional<IntVector> d)
    : N(std::move(n)), value_order(std::move(order)), degrees(std::move(d)) {
  if (value_order.rank() != N.rows()) throw std::invalid_argument("valuation table: value order rank differs from N");
  if (degrees) {
    if (degrees->size() != N.cols()) throw std::invalid_argument("valuation table: degree count differs from N");
    for (const auto& di : *degrees)
      if (di <= 0) throw std::invalid_argument("valuation table: degrees must be positive");
  }
}

RatVector ValuationTable::value(const Exponent& a) const {
  if (a.size() != N.cols()) throw std::invalid_argument("valuation table: exponent length mismatch");
  RatVector v(N.rows(), Rational(0));
  for (std::size_t i = 0; i < N.rows(); ++i)
    for (std::size_t j = 0; j < N.cols(); ++j)
      if (a[j]) v[i] += N(i, j) * a[j];
  return v;
}

Integer ValuationTable::degree(const Exponent& a) const {
  if (!degrees) throw std::logic_error("valuation table has no degrees");
  Integer s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (*degrees)[j] * a[j];
  return s;
}

std::strong_ordering ValuationTable::compare_values(const Exponent& a, const Exponent& b) const {
  if (degrees) {
    Integer da = degree(a), db = degree(b);
    if (da != db) return da > db ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return value_order.compare(value(a), value(b));
}

bool ValuationTable::same_value(const Exponent& a, const Exponent& b) const {
  return compare_values(a, b) == 0;
}

MonomialOrder valuation_induced_order(const ValuationTable& table, const MonomialOrder& tiebreak) {
  if (table.generators() != tiebreak.nvars())
    throw std::invalid_argument("valuation_induced_order: table has " + std::to_string(table.generators()) +
                                " generators but the ring has " + std::to_string(tiebreak.nvars()) + " variables");
  // Smaller value means larger monomial: weight rows are -O*N (after the degree row).
  RatMatrix neg = table.value_order.matrix() * table.N;
  const std::size_t extra = table.degrees ? 1 : 0;
  RatMatrix rows(neg.rows() + extra, neg.cols());
  if (table.degrees)
    for (std::size_t j = 0; j < neg.cols(); ++j) rows(0, j) = Rational((*table.degrees)[j]);
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) rows(i + extra, j) = -neg(i, j);
  return MonomialOrder::induced(rows, tiebreak);
}

}  // namespace khb
