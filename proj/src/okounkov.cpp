#include "khb/okounkov.hpp"

#include <algorithm>
#include <set>

namespace khb {

std::strong_ordering GradedValuation::compare(const RatVector& a, const RatVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw std::invalid_argument("GradedValuation::compare: length mismatch");
  if (a[0] != b[0]) return a[0] < b[0] ? std::strong_ordering::greater : std::strong_ordering::less;
  return base.value_order.compare(RatVector(a.begin() + 1, a.end()), RatVector(b.begin() + 1, b.end()));
}

GradedValuation extend_graded(const ValuationTable& table, const IntVector& degrees) {
  if (degrees.size() != table.generators()) throw std::invalid_argument("extend_graded: degree vector has wrong length");
  for (const auto& d : degrees)
    if (d <= 0) throw std::invalid_argument("extend_graded: degrees must be positive");
  ValuationTable graded(table.N, table.value_order, degrees);
  return GradedValuation{table, degrees, value_columns(graded)};
}

namespace {

Integer gcd_positive(const IntVector& d) {
  Integer g = gcd_of(d);
  return g < 0 ? Integer(-g) : g;
}

Integer norm_sq(const IntVector& d) {
  Integer s = 0;
  for (const auto& x : d) s += x * x;
  return s;
}

const IntVector& require_degrees(const std::optional<IntVector>& d, const char* who) {
  if (!d) throw std::invalid_argument(std::string(who) + ": degrees are required");
  return *d;
}

}  // namespace

Polytope nobody_direct(const ValuationTable& table) {
  const IntVector& d = require_degrees(table.degrees, "nobody_direct");
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < table.generators(); ++i) {
    RatVector p = table.N.column(i);
    for (auto& x : p) x /= Rational(d[i]);
    pts.push_back(std::move(p));
  }
  return convex_hull(pts);
}

DirectBody nobody_direct_report(const ValuationTable& table) {
  DirectBody out{nobody_direct(table), gcd_positive(*table.degrees), std::nullopt, std::nullopt};
  RatMatrix cols = value_columns(table);
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < cols.cols(); ++i) gens.push_back(cols.column(i));
  Lattice L = Lattice::from_generators(gens, cols.rows());
  if (L.rank() == cols.rows()) out.value_lattice_index = L.covolume();
  if (out.body.full_dimensional() && out.value_lattice_index)
    out.normalized_volume = Rational(factorial(table.rank())) * Rational(out.degree_gcd) * volume(out.body) /
                            *out.value_lattice_index;
  return out;
}

NOBodyReport algorithm1_from_context(const MuContext& ctx) {
  const IntVector& d = require_degrees(ctx.degrees, "algorithm1");
  NOBodyReport rep;
  rep.m = ctx.m;
  rep.ell = ctx.ell;
  rep.W = ctx.W;
  rep.Winv = ctx.Winv;
  const std::size_t k = ctx.m - ctx.ell;
  const RatMatrix mus = ctx.mu_rows();

  rep.V = RatMatrix(k - 1, ctx.m);
  rep.degree_normalized_view = RatMatrix(k - 1, ctx.m);
  rep.d_norm_sq = norm_sq(d);
  for (std::size_t i = 0; i < ctx.m; ++i)
    for (std::size_t r = 1; r < k; ++r) {
      rep.V(r - 1, i) = mus(r, i) / Rational(d[i]);
      rep.degree_normalized_view(r - 1, i) = Rational(rep.d_norm_sq) * mus(r, i) / mus(0, i);
    }

  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < ctx.m; ++i) gens.push_back(mus.column(i));
  Lattice Lp = Lattice::from_generators(gens, k);
  if (Lp.rank() != k) throw std::invalid_argument("algorithm1: mu values do not span a full-rank lattice");
  rep.L_prime = Lp.basis();
  rep.lattice_det = Lp.covolume();

  if (k == 1) {
    rep.point_body = true;
    rep.body.ambient_dim = 0;
    rep.body.dim = 0;
    rep.body.vertices = {RatVector{}};
    rep.body.euclidean_volume = 1;
    rep.euclidean_volume = 1;
  } else {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < ctx.m; ++i) pts.push_back(rep.V.column(i));
    rep.body = convex_hull(pts);
    rep.euclidean_volume = volume(rep.body);
  }
  rep.degree_gcd = gcd_positive(d);
  rep.factorial = factorial(k - 1);
  rep.normalized_volume = Rational(rep.factorial) * Rational(rep.degree_gcd) * rep.euclidean_volume /
                          (Rational(rep.d_norm_sq) * rep.lattice_det);
  return rep;
}

NOBodyReport algorithm1_volume(std::shared_ptr<const GroebnerBasis> G, const ValuationTable& table,
                               const Algorithm1Options& options) {
  if (!G) throw std::invalid_argument("algorithm1_volume: null basis");
  const IntVector& d = require_degrees(table.degrees, "algorithm1_volume");
  MuContext ctx = build_mu_context(G, MuOptions{d, options.extension, options.W});
  const int bound = options.degree_bound.value_or(default_degree_bound(*G));
  KhovanskiiCertificate cert = khovanskii_certificate(*G, table, ctx, bound);
  if (cert.verdict == Verdict::refuted)
    throw CertificateRefuted("algorithm1_volume: certificate refuted: " + cert.witness_description, cert);
  NOBodyReport rep = algorithm1_from_context(ctx);
  rep.certificate = std::move(cert);
  return rep;
}

NOBodyReport algorithm1_volume(const Lattice& K, const IntVector& degrees, const Algorithm1Options& options) {
  return algorithm1_from_context(build_mu_context(K, MuOptions{degrees, options.extension, options.W}));
}

RatVector AffineMap::apply(const RatVector& x) const {
  RatVector y = M.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
  return y;
}

AffineCheck affine_equivalence(const Polytope& body_mu, const Polytope& body_nu, const RatMatrix& phi) {
  AffineCheck out;
  const std::size_t p = phi.rows(), q = phi.cols();
  if (p == 0 || q == 0) {
    out.reason = "phi is empty";
    return out;
  }
  if (body_mu.ambient_dim != q - 1 || body_nu.ambient_dim != p - 1) {
    out.reason = "phi does not match the body dimensions";
    return out;
  }
  const Rational s = phi(0, 0);
  for (std::size_t j = 1; j < q; ++j)
    if (phi(0, j) != 0) {
      out.reason = "degree row of phi is not of the form (s, 0, ..., 0)";
      return out;
    }
  if (s == 0) {
    out.reason = "degree scale of phi is zero";
    return out;
  }
  AffineMap map{phi.row_block(1, p - 1).col_block(1, q - 1), RatVector(p - 1)};
  for (std::size_t i = 1; i < p; ++i) map.b[i - 1] = phi(i, 0) / s;
  out.map = map;

  if (body_mu.vertices.size() != body_nu.vertices.size()) {
    out.reason = "vertex counts differ";
    return out;
  }
  std::set<RatVector> target(body_nu.vertices.begin(), body_nu.vertices.end());
  std::set<RatVector> image;
  for (const auto& v : body_mu.vertices) {
    RatVector w = map.apply(v);
    if (!target.count(w)) {
      out.reason = "a vertex maps outside the target vertex set";
      return out;
    }
    image.insert(w);
  }
  if (image.size() != target.size()) {
    out.reason = "vertex map is not injective";
    return out;
  }
  out.pass = true;
  return out;
}

}  // namespace khb
