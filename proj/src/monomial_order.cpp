#include "khb/monomial_order.hpp"

#include <limits>
#include <stdexcept>

namespace khb {

Exponent add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[i] - a[i];
  return c;
}

int total_degree(const Exponent& a) {
  int s = 0;
  for (int e : a) s += e;
  return s;
}

IntVector difference(const Exponent& a, const Exponent& b) {
  IntVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

namespace {

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("monomial order weight does not fit in 64 bits");
  return z.get_si();
}

// Scale a rational row to a primitive-free integer row with the same sign pattern.
std::vector<std::int64_t> integer_row(const RatVector& row) {
  Integer l = lcm_of_denominators(row);
  std::vector<std::int64_t> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(to_int64(Integer(q.get_num() * (l / q.get_den()))));
  return out;
}

bool all_zero(const std::vector<std::int64_t>& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::size_t nvars, std::vector<std::int64_t> matrix, std::string description)
    : kind_(kind), nvars_(nvars), matrix_(std::move(matrix)), description_(std::move(description)) {
  nrows_ = nvars_ ? matrix_.size() / nvars_ : 0;
  validate();
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return MonomialOrder(Kind::lex, n, std::move(m), "lex");
}

MonomialOrder MonomialOrder::grlex(std::size_t n) {
  std::vector<std::int64_t> m((n + 1) * n, 0);
  for (std::size_t j = 0; j < n; ++j) m[j] = 1;
  for (std::size_t i = 0; i < n; ++i) m[(i + 1) * n + i] = 1;
  return MonomialOrder(Kind::grlex, n, std::move(m), "grlex");
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  // Degree, then the smaller last exponent wins: rows -e_n, ..., -e_2.
  std::vector<std::int64_t> m(n == 0 ? 0 : n * n, 0);
  for (std::size_t j = 0; j < n; ++j) m[j] = 1;
  for (std::size_t r = 1; r < n; ++r) m[r * n + (n - r)] = -1;
  return MonomialOrder(Kind::grevlex, n, std::move(m), "grevlex");
}

MonomialOrder MonomialOrder::weight(const RatMatrix& rows, const MonomialOrder& tiebreak) {
  if (rows.cols() != tiebreak.nvars()) throw std::invalid_argument("weight order: column count differs from tiebreak");
  const std::size_t n = tiebreak.nvars();
  std::vector<std::int64_t> m;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto r = integer_row(rows.row(i));
    if (all_zero(r)) continue;
    m.insert(m.end(), r.begin(), r.end());
  }
  m.insert(m.end(), tiebreak.matrix_.begin(), tiebreak.matrix_.end());
  return MonomialOrder(Kind::weight, n, std::move(m), "weight " + to_string(rows) + " tiebreak " + tiebreak.describe());
}

MonomialOrder MonomialOrder::induced(const RatMatrix& rows, const MonomialOrder& tiebreak) {
  MonomialOrder o = weight(rows, tiebreak);
  o.kind_ = Kind::valuation;
  o.description_ = "valuation-induced " + to_string(rows) + " tiebreak " + tiebreak.describe();
  return o;
}

MonomialOrder MonomialOrder::block(const std::vector<MonomialOrder>& blocks) {
  std::size_t n = 0, rows = 0;
  for (const auto& b : blocks) {
    n += b.nvars();
    rows += b.nrows();
  }
  std::vector<std::int64_t> m(rows * n, 0);
  std::size_t row0 = 0, col0 = 0;
  std::string desc = "block(";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    for (std::size_t i = 0; i < b.nrows(); ++i)
      for (std::size_t j = 0; j < b.nvars(); ++j) m[(row0 + i) * n + col0 + j] = b.entry(i, j);
    row0 += b.nrows();
    col0 += b.nvars();
    desc += (k ? "; " : "") + std::to_string(b.nvars()) + ":" + b.describe();
  }
  return MonomialOrder(Kind::block, n, std::move(m), desc + ")");
}

void MonomialOrder::validate() const {
  // Totality needs full column rank; 1-minimality needs every column lex-positive.
  RatMatrix a(nrows_, nvars_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < nvars_; ++j) a(i, j) = Rational(static_cast<long>(entry(i, j)));
  if (rank(a) != nvars_) throw std::invalid_argument("monomial order matrix is not of full column rank");
  for (std::size_t j = 0; j < nvars_; ++j) {
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (entry(i, j) == 0) continue;
      if (entry(i, j) < 0)
        throw std::invalid_argument("not a well-order: variable " + std::to_string(j + 1) + " compares below 1");
      break;
    }
  }
}

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != nvars_ || b.size() != nvars_) throw std::invalid_argument("compare: exponent length mismatch");
  const std::int64_t* row = matrix_.data();
  for (std::size_t i = 0; i < nrows_; ++i, row += nvars_) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < nvars_; ++j) {
      std::int64_t diff = static_cast<std::int64_t>(a[j]) - b[j];
      if (diff == 0 || row[j] == 0) continue;
      std::int64_t prod;
      if (__builtin_mul_overflow(row[j], diff, &prod) || __builtin_add_overflow(s, prod, &s))
        throw std::overflow_error("monomial comparison overflow");
    }
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<std::int64_t> MonomialOrder::key(const Exponent& a) const {
  if (a.size() != nvars_) throw std::invalid_argument("key: exponent length mismatch");
  std::vector<std::int64_t> k(nrows_, 0);
  const std::int64_t* row = matrix_.data();
  for (std::size_t i = 0; i < nrows_; ++i, row += nvars_) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (a[j] == 0 || row[j] == 0) continue;
      std::int64_t prod;
      if (__builtin_mul_overflow(row[j], static_cast<std::int64_t>(a[j]), &prod) ||
          __builtin_add_overflow(s, prod, &s))
        throw std::overflow_error("monomial key overflow");
    }
    k[i] = s;
  }
  return k;
}

}  // namespace khb
