#pragma once

#include "khb/groebner.hpp"
#include "khb/lattice.hpp"
#include "khb/sagbi.hpp"
#include "khb/valuation.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace khb {

/// Difference of the two largest monomials of f. Throws on monomials and zero.
IntVector toric_exponent(const Polynomial& f, const MonomialOrder& order);

/// Z-span of the toric exponents of a Groebner basis. Throws if some basis
/// element is a monomial (the ideal must be prime and monomial-free).
Lattice lattice_K(const GroebnerBasis& G);

/// Span of all a - b with equal values over exponents of degree <= bound.
/// A truncated cross-check for lattice_K.
Lattice lattice_K_from_valuation(const ValuationTable& table, int degree_bound);

/// W = [K basis | d | extension] (or [K basis | extension] without degrees).
struct MuContext {
  std::shared_ptr<const GroebnerBasis> gb;  // null for lattice-only contexts
  Lattice K{0};
  std::size_t m = 0;
  std::size_t ell = 0;
  std::optional<IntVector> degrees;
  RatMatrix W;
  RatMatrix Winv;

  /// The trailing m - ell rows of Winv.
  RatMatrix mu_rows() const { return Winv.row_block(ell, m - ell); }
  std::vector<RatVector> extension() const;
};

struct MuOptions {
  std::optional<IntVector> degrees;
  /// Replaces the computed extension vectors (must be orthogonal to d).
  std::optional<std::vector<RatVector>> extension;
  /// Replaces W outright; its first ell columns must generate K.
  std::optional<RatMatrix> W;
};

MuContext build_mu_context(std::shared_ptr<const GroebnerBasis> G, const MuOptions& options = {});
MuContext build_mu_context(const Lattice& K, const MuOptions& options = {});

/// A different valid extension: ext * T + K * S with T unimodular-ish
/// (random, nonsingular) and S random, both drawn from `seed`.
std::vector<RatVector> randomized_extension(const MuContext& ctx, std::uint64_t seed);

/// Positive exponent coordinates of lm(f~) against w_{ell+1}, ..., w_m.
struct MuValue {
  RatVector coords;
  friend bool operator==(const MuValue&, const MuValue&) = default;
  friend auto operator<=>(const MuValue& a, const MuValue& b) { return a.coords <=> b.coords; }
};

MuValue mu_of_exponent(const Exponent& a, const MuContext& ctx);
/// Throws std::invalid_argument on the zero class.
MuValue mu(const QuotientElement& e, const MuContext& ctx);

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Smallest standard monomial of degree <= bound with the given value.
std::optional<Exponent> smallest_representative(const MuValue& v, const MuContext& ctx, int degree_bound);

/// The image order: a < b iff the smallest monomial of a is larger than the
/// smallest monomial of b. Throws BoundExceeded when a representative is
/// not found within the bound.
std::strong_ordering compare_mu(const MuValue& a, const MuValue& b, const MuContext& ctx, int degree_bound);

struct TiedPair {
  std::size_t element = 0;
  Exponent first;
  Exponent second;
  RatVector value;
};

struct AttainedTwiceResult {
  bool pass = true;
  std::vector<TiedPair> ties;
  std::optional<std::size_t> witness;  // index into G.elements()
  std::optional<std::pair<Exponent, Exponent>> witness_monomials;
};

/// Every basis element's two largest monomials must share a value.
AttainedTwiceResult attained_twice_check(const GroebnerBasis& G, const ValuationTable& table);

struct LeavesResult {
  bool pass = true;
  int degree_bound = 0;
  std::size_t classes = 0;
  std::optional<std::pair<Exponent, Exponent>> witness;
};

/// Standard monomials of degree <= bound must have pairwise distinct mu.
LeavesResult leaves_check(const MuContext& ctx, int degree_bound);

/// 2 * (max degree of the basis), at least 2.
int default_degree_bound(const GroebnerBasis& G);

enum class Verdict { certified_up_to_bound, refuted, inconclusive };
std::string to_string(Verdict v);

struct KhovanskiiCertificate {
  AttainedTwiceResult attained_twice;
  LeavesResult leaves;
  bool standard_vars_complete = false;
  int leaves_ok_up_to = -1;
  Verdict verdict = Verdict::inconclusive;
  std::string witness_description;
};

KhovanskiiCertificate khovanskii_certificate(const GroebnerBasis& G, const ValuationTable& table,
                                             const MuContext& ctx, int degree_bound);

/// phi with phi(mu([x_i])) = nu(g_i); nu includes the degree row when graded.
struct PhiResult {
  RatMatrix phi;
  std::vector<std::size_t> basis_indices;
  std::vector<std::size_t> inconsistent;
  bool consistent() const { return inconsistent.empty(); }
};

/// The graded value columns (d_i; N_i) when degrees are present, else N.
RatMatrix value_columns(const ValuationTable& table);

PhiResult phi_transformation(const ValuationTable& table, const MuContext& ctx);

}  // namespace khb
