#include "khb/khovanskii.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace khb {

IntVector toric_exponent(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("toric_exponent: zero polynomial");
  if (f.is_monomial()) throw std::invalid_argument("toric_exponent: monomials have no toric exponent");
  auto [a, b] = two_leading_monomials(f, order);
  return difference(a, b);
}

Lattice lattice_K(const GroebnerBasis& G) {
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < G.size(); ++j) {
    const auto& g = G.elements()[j];
    if (g.is_monomial())
      throw std::invalid_argument("lattice_K: Groebner basis element " + std::to_string(j) +
                                  " is a monomial; the ideal must be prime and monomial-free");
    gens.push_back(toric_exponent(g, G.order()));
  }
  return Lattice::from_generators(gens, G.nvars());
}

Lattice lattice_K_from_valuation(const ValuationTable& table, int degree_bound) {
  const std::size_t m = table.generators();
  std::map<RatVector, Exponent> first_seen;
  std::vector<IntVector> gens;
  for (const auto& a : monomials_up_to(m, degree_bound)) {
    RatVector key = table.value(a);
    if (table.degrees) key.insert(key.begin(), Rational(table.degree(a)));
    auto [it, fresh] = first_seen.emplace(key, a);
    if (!fresh) gens.push_back(difference(a, it->second));
  }
  return Lattice::from_generators(gens, m);
}

std::vector<RatVector> MuContext::extension() const {
  const std::size_t start = ell + (degrees ? 1 : 0);
  std::vector<RatVector> out;
  for (std::size_t j = start; j < m; ++j) out.push_back(W.column(j));
  return out;
}

namespace {

std::string vector_text(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::vector<RatVector> orthogonal_complement_basis(const Lattice& K) {
  const std::size_t m = K.ambient_dim();
  auto kv = K.basis_vectors();
  if (kv.empty()) {
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < m; ++i) {
      RatVector e(m, Rational(0));
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  std::vector<RatVector> out;
  for (const auto& v : nullspace(RatMatrix::from_rows(kv, m))) out.push_back(to_rational(primitive_integer_vector(v)));
  return out;
}

MuContext assemble(std::shared_ptr<const GroebnerBasis> G, const Lattice& K, const MuOptions& options) {
  MuContext ctx;
  ctx.gb = std::move(G);
  ctx.K = K;
  ctx.m = K.ambient_dim();
  ctx.ell = K.rank();
  ctx.degrees = options.degrees;
  const std::size_t m = ctx.m;
  auto kvecs = K.basis_vectors();

  if (ctx.degrees) {
    if (ctx.degrees->size() != m) throw std::invalid_argument("build_mu_context: degree vector has wrong length");
    RatVector dq = to_rational(*ctx.degrees);
    for (std::size_t j = 0; j < kvecs.size(); ++j)
      if (dot(kvecs[j], dq) != 0)
        throw std::invalid_argument("build_mu_context: d is not orthogonal to lattice basis vector " +
                                    vector_text(kvecs[j]));
  }

  if (options.W) {
    const RatMatrix& W = *options.W;
    if (W.rows() != m || W.cols() != m) throw std::invalid_argument("build_mu_context: W must be m x m");
    std::vector<RatVector> lead;
    for (std::size_t j = 0; j < ctx.ell; ++j) lead.push_back(W.column(j));
    if (!(Lattice::from_generators(lead, m) == K))
      throw std::invalid_argument("build_mu_context: the first columns of W do not generate K");
    if (ctx.degrees && W.column(ctx.ell) != to_rational(*ctx.degrees))
      throw std::invalid_argument("build_mu_context: column ell+1 of W must be d");
    ctx.W = W;
  } else {
    std::vector<RatVector> cols = kvecs;
    if (ctx.degrees) cols.push_back(to_rational(*ctx.degrees));
    std::vector<RatVector> ext;
    if (options.extension) {
      ext = *options.extension;
    } else if (ctx.degrees) {
      for (const auto& v : orthogonal_extension(K, *ctx.degrees)) ext.push_back(to_rational(v));
    } else {
      ext = orthogonal_complement_basis(K);
    }
    cols.insert(cols.end(), ext.begin(), ext.end());
    if (cols.size() != m) throw std::invalid_argument("build_mu_context: extension has the wrong number of vectors");
    ctx.W = RatMatrix::from_columns(cols, m);
  }

  if (ctx.degrees) {
    RatVector dq = to_rational(*ctx.degrees);
    for (std::size_t j = ctx.ell + 1; j < m; ++j)
      if (dot(ctx.W.column(j), dq) != 0)
        throw std::invalid_argument("build_mu_context: extension column " + std::to_string(j) +
                                    " is not orthogonal to d");
  }
  try {
    ctx.Winv = invert(ctx.W);
  } catch (const SingularMatrix&) {
    throw std::invalid_argument("build_mu_context: W is singular");
  }
  return ctx;
}

}  // namespace

MuContext build_mu_context(std::shared_ptr<const GroebnerBasis> G, const MuOptions& options) {
  if (!G) throw std::invalid_argument("build_mu_context: null basis");
  Lattice K = lattice_K(*G);
  return assemble(std::move(G), K, options);
}

MuContext build_mu_context(const Lattice& K, const MuOptions& options) { return assemble(nullptr, K, options); }

std::vector<RatVector> randomized_extension(const MuContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);
  auto ext = ctx.extension();
  const std::size_t e = ext.size();
  auto kvecs = ctx.K.basis_vectors();
  RatMatrix T(e, e);
  do {
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < e; ++j) T(i, j) = small(rng);
  } while (e > 0 && determinant(T) == 0);
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < e; ++j) {
    RatVector v(ctx.m, Rational(0));
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t r = 0; r < ctx.m; ++r) v[r] += ext[i][r] * T(i, j);
    for (const auto& k : kvecs) {
      Rational s = small(rng);
      for (std::size_t r = 0; r < ctx.m; ++r) v[r] += s * k[r];
    }
    out.push_back(v);
  }
  return out;
}

MuValue mu_of_exponent(const Exponent& a, const MuContext& ctx) {
  if (a.size() != ctx.m) throw std::invalid_argument("mu: exponent length mismatch");
  RatVector av(a.begin(), a.end());
  return MuValue{ctx.mu_rows().apply(av)};
}

MuValue mu(const QuotientElement& e, const MuContext& ctx) {
  if (e.is_zero()) throw std::invalid_argument("mu: zero class");
  return mu_of_exponent(leading_monomial(e.representative(), e.ideal_basis().order()), ctx);
}

std::optional<Exponent> smallest_representative(const MuValue& v, const MuContext& ctx, int degree_bound) {
  if (!ctx.gb) throw std::invalid_argument("smallest_representative: context has no Groebner basis");
  for (const auto& a : standard_monomials_up_to(*ctx.gb, degree_bound))
    if (mu_of_exponent(a, ctx) == v) return a;
  return std::nullopt;
}

std::strong_ordering compare_mu(const MuValue& a, const MuValue& b, const MuContext& ctx, int degree_bound) {
  if (a == b) return std::strong_ordering::equal;
  auto ra = smallest_representative(a, ctx, degree_bound);
  auto rb = smallest_representative(b, ctx, degree_bound);
  if (!ra || !rb)
    throw BoundExceeded("compare_mu: no standard representative within degree bound " + std::to_string(degree_bound));
  // Larger smallest monomial means smaller value.
  return ctx.gb->order().compare(*rb, *ra);
}

AttainedTwiceResult attained_twice_check(const GroebnerBasis& G, const ValuationTable& table) {
  AttainedTwiceResult res;
  for (std::size_t j = 0; j < G.size(); ++j) {
    const auto& g = G.elements()[j];
    if (g.size() < 2) {
      res.pass = false;
      res.witness = j;
      return res;
    }
    auto [a, b] = two_leading_monomials(g, G.order());
    if (!table.same_value(a, b)) {
      res.pass = false;
      res.witness = j;
      res.witness_monomials = std::make_pair(a, b);
      return res;
    }
    res.ties.push_back({j, a, b, table.value(a)});
  }
  return res;
}

LeavesResult leaves_check(const MuContext& ctx, int degree_bound) {
  if (!ctx.gb) throw std::invalid_argument("leaves_check: context has no Groebner basis");
  LeavesResult res;
  res.degree_bound = degree_bound;
  std::map<RatVector, Exponent> seen;
  for (const auto& a : standard_monomials_up_to(*ctx.gb, degree_bound)) {
    auto [it, fresh] = seen.emplace(mu_of_exponent(a, ctx).coords, a);
    if (!fresh) {
      res.pass = false;
      res.witness = std::make_pair(it->second, a);
      res.classes = seen.size();
      return res;
    }
  }
  res.classes = seen.size();
  return res;
}

int default_degree_bound(const GroebnerBasis& G) { return std::max(2, 2 * G.max_degree()); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_up_to_bound: return "certified-up-to-bound";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::string exponent_text(const Exponent& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace

KhovanskiiCertificate khovanskii_certificate(const GroebnerBasis& G, const ValuationTable& table,
                                             const MuContext& ctx, int degree_bound) {
  KhovanskiiCertificate cert;
  cert.attained_twice = attained_twice_check(G, table);
  cert.standard_vars_complete = standard_variable_set(G).size() == G.nvars();
  if (!cert.attained_twice.pass) {
    cert.verdict = Verdict::refuted;
    const auto& g = G.elements()[*cert.attained_twice.witness];
    cert.witness_description = "basis element " + to_string(g, default_variable_names(G.nvars()), G.order()) +
                               (g.size() < 2 ? " is a monomial" : " has distinct values on its two largest monomials");
    return cert;
  }
  cert.leaves = leaves_check(ctx, degree_bound);
  if (!cert.leaves.pass) {
    cert.verdict = Verdict::refuted;
    cert.witness_description = "standard monomials " + exponent_text(cert.leaves.witness->first) + " and " +
                               exponent_text(cert.leaves.witness->second) + " share a mu value";
    return cert;
  }
  cert.leaves_ok_up_to = degree_bound;
  cert.verdict = cert.standard_vars_complete ? Verdict::certified_up_to_bound : Verdict::inconclusive;
  return cert;
}

RatMatrix value_columns(const ValuationTable& table) {
  if (!table.degrees) return table.N;
  const std::size_t r = table.rank(), m = table.generators();
  RatMatrix out(r + 1, m);
  for (std::size_t i = 0; i < m; ++i) {
    out(0, i) = (*table.degrees)[i];
    for (std::size_t k = 0; k < r; ++k) out(k + 1, i) = table.N(k, i);
  }
  return out;
}

PhiResult phi_transformation(const ValuationTable& table, const MuContext& ctx) {
  if (table.generators() != ctx.m) throw std::invalid_argument("phi_transformation: table/ring mismatch");
  const RatMatrix values = value_columns(table);
  const RatMatrix mus = ctx.mu_rows();
  const std::size_t k = mus.rows();
  PhiResult res;
  std::vector<RatVector> chosen;
  for (std::size_t i = 0; i < ctx.m && chosen.size() < k; ++i) {
    chosen.push_back(mus.column(i));
    if (rank(RatMatrix::from_columns(chosen, k)) == chosen.size()) {
      res.basis_indices.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (chosen.size() < k)
    throw std::invalid_argument("phi_transformation: mu values span rank " + std::to_string(chosen.size()) +
                                " < " + std::to_string(k) + "; phi is underdetermined");
  RatMatrix B = RatMatrix::from_columns(chosen, k);
  std::vector<RatVector> targets;
  for (auto i : res.basis_indices) targets.push_back(values.column(i));
  res.phi = RatMatrix::from_columns(targets, values.rows()) * invert(B);
  for (std::size_t i = 0; i < ctx.m; ++i)
    if (res.phi.apply(mus.column(i)) != values.column(i)) res.inconsistent.push_back(i);
  return res;
}

}  // namespace khb
