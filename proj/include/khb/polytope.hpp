#pragma once

#include "khb/matrix.hpp"

#include <cstddef>
#include <vector>

namespace khb {

/// normal . x <= offset, with normal a primitive integer vector.
struct Facet {
  RatVector normal;
  Rational offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// The convex hull of finitely many rational points.
///
/// `vertices` are exactly the extreme points. In the plane they run
/// counterclockwise from the lexicographically smallest; otherwise they are
/// sorted lexicographically. Facets are listed only for full-dimensional
/// polytopes, one per supporting hyperplane.
struct Polytope {
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  std::vector<RatVector> vertices;
  std::vector<Facet> facets;
  Rational euclidean_volume = 0;

  bool full_dimensional() const { return dim == ambient_dim; }
  /// Only for full-dimensional polytopes.
  bool contains(const RatVector& p) const;
};

inline constexpr std::size_t max_hull_dimension = 6;

/// Exact hull by incremental insertion in the affine span of the points.
/// Throws std::invalid_argument on empty input, ragged points, or an
/// affine span above max_hull_dimension.
Polytope convex_hull(const std::vector<RatVector>& points);

/// Euclidean volume in the ambient space; 0 when not full-dimensional
/// (check `dim` for the affine span's dimension).
inline Rational volume(const Polytope& p) { return p.full_dimensional() ? p.euclidean_volume : Rational(0); }

/// |det(v_1 - v_0, ..., v_k - v_0)| / k! for k+1 points in Q^k.
Rational simplex_volume(const std::vector<RatVector>& simplex);

}  // namespace khb
