#pragma once

#include "khb/khovanskii.hpp"
#include "khb/polytope.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

namespace khb {

/// nu(f) = (top degree m, nu'(f_m)), ordered so that (m,a) > (n,b) iff
/// m < n, or m = n and a > b under the base value order.
struct GradedValuation {
  ValuationTable base;
  IntVector degrees;
  RatMatrix values;  // (r+1) x m, first row = degrees

  std::size_t rank() const { return values.rows(); }
  std::strong_ordering compare(const RatVector& a, const RatVector& b) const;
  /// The base table carrying the degrees.
  ValuationTable as_table() const { return ValuationTable(base.N, base.value_order, degrees); }
};

/// Throws std::invalid_argument on nonpositive degrees or length mismatch.
GradedValuation extend_graded(const ValuationTable& table, const IntVector& degrees);

struct DirectBody {
  Polytope body;
  Integer degree_gcd;
  /// Covolume of the lattice generated by the columns (d_i; nu'(g_i)).
  std::optional<Rational> value_lattice_index;
  /// r! gcd(d) vol / index, when the body is full-dimensional.
  std::optional<Rational> normalized_volume;
};

/// conv{nu'(g_i) / d_i}. Requires degrees.
Polytope nobody_direct(const ValuationTable& table);
DirectBody nobody_direct_report(const ValuationTable& table);

struct NOBodyReport {
  Polytope body;  // conv of the columns of V
  std::size_t m = 0;
  std::size_t ell = 0;
  Rational euclidean_volume;
  Rational lattice_det;  // |det L'|
  Integer degree_gcd;
  Integer d_norm_sq;
  Integer factorial;  // (m - ell - 1)!
  Rational normalized_volume;
  bool point_body = false;  // m - ell - 1 = 0; vol taken as 1
  RatMatrix W, Winv, V, L_prime;
  /// ||d||^2 mu([x_i]) / mu([x_i])_1 without the constant first coordinate.
  RatMatrix degree_normalized_view;
  std::optional<KhovanskiiCertificate> certificate;
};

struct CertificateRefuted : std::invalid_argument {
  CertificateRefuted(const std::string& what, KhovanskiiCertificate c)
      : std::invalid_argument(what), certificate(std::move(c)) {}
  KhovanskiiCertificate certificate;
};

struct Algorithm1Options {
  std::optional<RatMatrix> W;
  std::optional<std::vector<RatVector>> extension;
  std::optional<int> degree_bound;
};

/// Body, lattice and normalized volume from an assembled context (degrees required).
NOBodyReport algorithm1_from_context(const MuContext& ctx);

/// Full run from a Groebner basis under the order induced by `table`.
/// Certifies first; a refuted certificate throws CertificateRefuted.
NOBodyReport algorithm1_volume(std::shared_ptr<const GroebnerBasis> G, const ValuationTable& table,
                               const Algorithm1Options& options = {});

/// Lattice-only run: K given directly, no certificate.
NOBodyReport algorithm1_volume(const Lattice& K, const IntVector& degrees, const Algorithm1Options& options = {});

struct AffineMap {
  RatMatrix M;
  RatVector b;
  RatVector apply(const RatVector& x) const;
};

struct AffineCheck {
  bool pass = false;
  std::optional<AffineMap> map;
  std::string reason;
};

/// Builds x -> Mx + b from phi = [[s, 0], [c, M]] (degree coordinate
/// first in both spaces) with b = c / s, and checks that it maps the
/// vertices of body_mu bijectively onto those of body_nu.
AffineCheck affine_equivalence(const Polytope& body_mu, const Polytope& body_nu, const RatMatrix& phi);

}  // namespace khb
