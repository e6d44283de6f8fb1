#pragma once

#include "khb/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace khb {

/// Column-style Hermite normal form: H = M * U with U unimodular.
///
/// H is in lower column echelon form: pivot rows strictly increase with the
/// column index, pivots are positive, every entry left of a pivot (in the
/// pivot's row) lies in [0, pivot), and the trailing columns past the rank
/// are zero.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteResult hnf(const IntMatrix& M);

/// A lattice (1/scale) * Z{columns of integer_basis()} in Q^n.
///
/// The representation is canonical: the integer basis is in HNF with its
/// zero columns dropped, and gcd(scale, all basis entries) = 1. Two lattices
/// are equal as sets iff they compare equal.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim);

  static Lattice from_generators(const std::vector<RatVector>& generators, std::size_t ambient_dim);
  static Lattice from_generators(const std::vector<IntVector>& generators, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return integer_basis_.cols(); }
  const IntMatrix& integer_basis() const { return integer_basis_; }
  const Integer& scale() const { return scale_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

  RatMatrix basis() const;
  std::vector<RatVector> basis_vectors() const;

  /// Integer coordinates of v against the basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const RatVector& v) const;
  bool contains(const RatVector& v) const { return coordinates(v).has_value(); }
  bool contains(const IntVector& v) const { return contains(to_rational(v)); }
  bool contains(const Lattice& other) const;

  /// |det| of the basis; only defined for full-rank lattices.
  Rational covolume() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.scale_ == b.scale_ &&
           a.integer_basis_ == b.integer_basis_;
  }

 private:
  std::size_t ambient_dim_;
  IntMatrix integer_basis_;
  Integer scale_ = 1;
  std::vector<std::size_t> pivot_rows_;
};

inline Lattice lattice_from_generators(const std::vector<RatVector>& vectors, std::size_t ambient_dim) {
  return Lattice::from_generators(vectors, ambient_dim);
}

/// Vectors w_{l+2}, ..., w_m, each orthogonal to d, completing the lattice
/// basis and d to a Q-basis of Q^m. Output vectors are primitive, sign
/// normalized, and sorted, so the result is deterministic.
///
/// Throws std::invalid_argument if d is zero or not orthogonal to k_basis.
std::vector<IntVector> orthogonal_extension(const Lattice& k_basis, const IntVector& d);

}  // namespace khb
