#include "khb/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace khb {

namespace {

void swap_columns(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

void negate_column(IntMatrix& a, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = -a(r, j);
}

// col_j -= q * col_i
void sub_multiple(IntMatrix& a, std::size_t j, std::size_t i, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) -= q * a(r, i);
}

// (col_i, col_j) <- (p col_i + q col_j, s col_i + t col_j), determinant p t - q s = 1.
void combine(IntMatrix& a, std::size_t i, std::size_t j, const Integer& p, const Integer& q, const Integer& s,
             const Integer& t) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer ci = a(r, i), cj = a(r, j);
    a(r, i) = p * ci + q * cj;
    a(r, j) = s * ci + t * cj;
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hnf(const IntMatrix& M) {
  HermiteResult res{M, IntMatrix::identity(M.cols()), 0, {}};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  std::size_t c = 0;
  for (std::size_t r = 0; r < H.rows() && c < H.cols(); ++r) {
    // Fold every column right of c into column c along row r.
    for (std::size_t j = c + 1; j < H.cols(); ++j) {
      if (H(r, j) == 0) continue;
      if (H(r, c) == 0) {
        swap_columns(H, c, j);
        swap_columns(U, c, j);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), H(r, c).get_mpz_t(), H(r, j).get_mpz_t());
      Integer a_div = H(r, c) / g, b_div = H(r, j) / g;
      // [x y; -b/g a/g] has determinant (x a + y b)/g = 1.
      combine(H, c, j, x, y, -b_div, a_div);
      combine(U, c, j, x, y, -b_div, a_div);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_column(H, c);
      negate_column(U, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q = floor_div(H(r, j), H(r, c));
      sub_multiple(H, j, c, q);
      sub_multiple(U, j, c, q);
    }
    res.pivot_rows.push_back(r);
    ++c;
  }
  res.rank = c;
  return res;
}

Lattice::Lattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim), integer_basis_(ambient_dim, 0) {}

Lattice Lattice::from_generators(const std::vector<IntVector>& generators, std::size_t ambient_dim) {
  std::vector<RatVector> rat;
  rat.reserve(generators.size());
  for (const auto& g : generators) rat.push_back(to_rational(g));
  return from_generators(rat, ambient_dim);
}

Lattice Lattice::from_generators(const std::vector<RatVector>& generators, std::size_t ambient_dim) {
  Lattice L(ambient_dim);
  if (generators.empty()) return L;
  Integer scale = 1;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("lattice_from_generators: ambient dimension mismatch");
    Integer l = lcm_of_denominators(g);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), l.get_mpz_t());
  }
  IntMatrix M(ambient_dim, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      Rational v = generators[j][i] * scale;
      M(i, j) = v.get_num();
    }
  HermiteResult h = hnf(M);
  IntMatrix B = h.H.col_block(0, h.rank);
  Integer g = scale;
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), B(i, j).get_mpz_t());
  if (g > 1) {
    for (std::size_t i = 0; i < B.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) /= g;
    scale /= g;
  }
  // Dividing by a common positive factor preserves the HNF shape.
  L.integer_basis_ = std::move(B);
  L.scale_ = scale;
  L.pivot_rows_ = std::move(h.pivot_rows);
  return L;
}

RatMatrix Lattice::basis() const {
  RatMatrix b = to_rational(integer_basis_);
  Rational inv(Integer(1), scale_);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= inv;
  return b;
}

std::vector<RatVector> Lattice::basis_vectors() const {
  RatMatrix b = basis();
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b.column(j));
  return out;
}

std::optional<IntVector> Lattice::coordinates(const RatVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Lattice::coordinates: dimension mismatch");
  IntVector w(ambient_dim_);
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    Rational s = v[i] * scale_;
    if (!is_integer(s)) return std::nullopt;
    w[i] = s.get_num();
  }
  const IntMatrix& B = integer_basis_;
  IntVector coords(B.cols());
  // Lower echelon: column j is zero above pivot_rows_[j].
  for (std::size_t j = 0; j < B.cols(); ++j) {
    const std::size_t r = pivot_rows_[j];
    Integer residual = w[r];
    for (std::size_t k = 0; k < j; ++k) residual -= coords[k] * B(r, k);
    if (!mpz_divisible_p(residual.get_mpz_t(), B(r, j).get_mpz_t())) return std::nullopt;
    coords[j] = residual / B(r, j);
  }
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < B.cols(); ++j) acc += coords[j] * B(i, j);
    if (acc != w[i]) return std::nullopt;
  }
  return coords;
}

bool Lattice::contains(const Lattice& other) const {
  for (const auto& v : other.basis_vectors())
    if (!contains(v)) return false;
  return true;
}

Rational Lattice::covolume() const {
  if (rank() != ambient_dim_) throw std::domain_error("Lattice::covolume: lattice is not full rank");
  return abs(determinant(basis()));
}

std::vector<IntVector> orthogonal_extension(const Lattice& k_basis, const IntVector& d) {
  const std::size_t m = k_basis.ambient_dim();
  if (d.size() != m) throw std::invalid_argument("orthogonal_extension: dimension mismatch");
  RatVector dq = to_rational(d);
  if (std::all_of(d.begin(), d.end(), [](const Integer& z) { return z == 0; }))
    throw std::invalid_argument("orthogonal_extension: d is zero");
  auto kvecs = k_basis.basis_vectors();
  for (std::size_t j = 0; j < kvecs.size(); ++j)
    if (dot(kvecs[j], dq) != 0)
      throw std::invalid_argument("orthogonal_extension: d is not orthogonal to lattice basis vector " +
                                  std::to_string(j));

  RatMatrix drow(1, m);
  for (std::size_t i = 0; i < m; ++i) drow(0, i) = dq[i];
  std::vector<RatVector> current = kvecs;
  current.push_back(dq);
  std::size_t current_rank = current.size();
  std::vector<IntVector> out;
  for (const auto& candidate : nullspace(drow)) {
    if (current_rank == m) break;
    current.push_back(candidate);
    RatMatrix stacked = RatMatrix::from_columns(current, m);
    if (rank(stacked) > current_rank) {
      ++current_rank;
      out.push_back(primitive_integer_vector(candidate));
    } else {
      current.pop_back();
    }
  }
  if (current_rank != m) throw std::logic_error("orthogonal_extension: lattice basis and d are dependent");
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

}  // namespace khb
