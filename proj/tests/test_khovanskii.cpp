#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace khb;
using namespace khb::testdata;

namespace {

MuContext alternating_ctx() { return build_mu_context(alternating_gb(), MuOptions{alternating_degrees(), {}, {}}); }

MuContext pentagon_ctx_printed_W() {
  return build_mu_context(pentagon_gb(), MuOptions{pentagon_degrees(), {}, pentagon_W()});
}

RatMatrix printed_V() {
  return RatMatrix{{q("-11/190"), q("13/38"), q("-91/95"), q("-53/95"), q("-3/19"), q("23/95"), q("-49/190"), q("23/95")},
                   {q("3/190"), q("-7/38"), q("68/95"), q("49/95"), q("6/19"), q("11/95"), q("11/95"), q("-62/285")}};
}

Exponent unit(std::size_t n, std::size_t i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}

// Degenerate: x1^2 - x2^2 has a binomial basis but x1, x2 share every value.
std::shared_ptr<const GroebnerBasis> square_difference_gb(const ValuationTable& t) {
  Ideal I(2, {parse_polynomial("x1^2 - x2^2", {"x1", "x2"})});
  return std::make_shared<const GroebnerBasis>(buchberger(I, valuation_induced_order(t, MonomialOrder::grevlex(2))));
}

ValuationTable flat_table() { return ValuationTable(RatMatrix{{0, 0}}, ValueOrder::lex(1), IntVector{1, 1}); }

}  // namespace

TEST(ToricExponent, Examples) {
  EXPECT_EQ(toric_exponent(alternating_relation(), ray_order()), (IntVector{0, 3, 0, -2}));
  EXPECT_EQ(toric_exponent(parse_polynomial("x - y", {"x", "y"}), MonomialOrder::lex(2)), (IntVector{1, -1}));
  EXPECT_THROW(toric_exponent(Polynomial::variable(2, 0), MonomialOrder::lex(2)), std::invalid_argument);
  EXPECT_THROW(toric_exponent(Polynomial(2), MonomialOrder::lex(2)), std::invalid_argument);
}

TEST(LatticeK, AlternatingAndMonomialRejection) {
  EXPECT_EQ(lattice_K(*alternating_gb()), Lattice::from_generators(std::vector<IntVector>{{0, 3, 0, -2}}, 4));
  GroebnerBasis mono = buchberger(Ideal(2, {parse_polynomial("x1*x2", {"x1", "x2"})}), MonomialOrder::lex(2));
  try {
    lattice_K(mono);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("monomial"), std::string::npos);
  }
}

TEST(LatticeK, AgreesWithTheValuationCrossCheck) {
  Lattice K = lattice_K(*alternating_gb());
  EXPECT_EQ(lattice_K_from_valuation(ray_table(), 3), K);
  EXPECT_EQ(lattice_K_from_valuation(ray_table(), alternating_gb()->max_degree()), K);
  auto G = pentagon_gb();
  EXPECT_EQ(lattice_K(*G), pentagon_K());
  EXPECT_EQ(lattice_K_from_valuation(pentagon_table(), G->max_degree()), pentagon_K());
  // Every K vector pairs generators with equal graded value.
  RatMatrix cols = value_columns(pentagon_table());
  for (const auto& k : pentagon_K().basis_vectors()) EXPECT_EQ(cols.apply(k), RatVector(3));
  EXPECT_EQ(pentagon_K().rank(), 5u);
}

TEST(LatticeK, IndependentOfTheTiebreak) {
  EXPECT_EQ(lattice_K(*alternating_gb(ray_order(MonomialOrder::lex(4)))), lattice_K(*alternating_gb()));
  EXPECT_EQ(lattice_K(*pentagon_gb(MonomialOrder::lex(8))), lattice_K(*pentagon_gb()));
  EXPECT_EQ(lattice_K(*pentagon_gb(MonomialOrder::grlex(8))), pentagon_K());
}

TEST(MuContext, AlternatingShape) {
  MuContext ctx = alternating_ctx();
  EXPECT_EQ(ctx.m, 4u);
  EXPECT_EQ(ctx.ell, 1u);
  EXPECT_EQ(ctx.W.column(0), (RatVector{0, 3, 0, -2}));
  EXPECT_EQ(ctx.W.column(1), (RatVector{1, 2, 3, 3}));
  EXPECT_EQ(ctx.W * ctx.Winv, RatMatrix::identity(4));
  for (const auto& e : ctx.extension()) EXPECT_EQ(dot(e, RatVector{1, 2, 3, 3}), 0);
  EXPECT_EQ(ctx.mu_rows().rows(), 3u);
  // First mu coordinate is degree / |d|^2.
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(ctx.mu_rows()(0, i), Rational(alternating_degrees()[i]) / 23);
}

TEST(MuContext, RejectsInvalidInputs) {
  try {
    build_mu_context(alternating_gb(), MuOptions{IntVector{1, 1, 1, 1}, {}, {}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not orthogonal"), std::string::npos);
  }
  RatMatrix badW = pentagon_W();
  badW(0, 0) = 2;
  EXPECT_THROW(build_mu_context(pentagon_gb(), MuOptions{pentagon_degrees(), {}, badW}), std::invalid_argument);
  std::vector<RatVector> ext = {RatVector{1, 0, 0, 0}, RatVector{0, 0, 1, -1}};
  EXPECT_THROW(build_mu_context(alternating_gb(), MuOptions{alternating_degrees(), ext, {}}), std::invalid_argument);
  std::vector<RatVector> singular = {RatVector{0, 0, 1, -1}, RatVector{0, 0, 2, -2}};
  EXPECT_THROW(build_mu_context(alternating_gb(), MuOptions{alternating_degrees(), singular, {}}), std::invalid_argument);
}

TEST(Mu, PentagonVariablesMatchThePrintedValueMatrix) {
  MuContext ctx = pentagon_ctx_printed_W();
  IntVector d = pentagon_degrees();
  RatMatrix V = printed_V();
  for (std::size_t i = 0; i < 8; ++i) {
    MuValue v = mu_of_exponent(unit(8, i), ctx);
    ASSERT_EQ(v.coords.size(), 3u);
    EXPECT_EQ(v.coords[0], Rational(d[i]) / 19);  // the d row of W^-1 is d / |d|^2
    EXPECT_EQ(v.coords[1] / Rational(d[i]), V(0, i));
    EXPECT_EQ(v.coords[2] / Rational(d[i]), V(1, i));
  }
}

TEST(Mu, QuotientClassUsesTheNormalForm) {
  MuContext ctx = alternating_ctx();
  auto G = alternating_gb();
  QuotientElement c(G, parse_polynomial("x2^3", xs()));
  EXPECT_EQ(mu(c, ctx), mu_of_exponent(Exponent{0, 0, 0, 2}, ctx));
  EXPECT_EQ(mu_of_exponent(Exponent{0, 3, 0, 0}, ctx), mu_of_exponent(Exponent{0, 0, 0, 2}, ctx));
  EXPECT_THROW(mu(QuotientElement(G, Polynomial(4)), ctx), std::invalid_argument);
}

TEST(MuProperty, AdditiveAndConstantOnKCosets) {
  std::mt19937_64 rng(555);
  MuContext ctx = pentagon_ctx_printed_W();
  auto kb = pentagon_K().basis_vectors();
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    Exponent a = random_exponent(rng, 8, 3), b = random_exponent(rng, 8, 3);
    RatVector lhs = mu_of_exponent(add(a, b), ctx).coords, ra = mu_of_exponent(a, ctx).coords,
              rb = mu_of_exponent(b, ctx).coords;
    for (std::size_t r = 0; r < 3; ++r) ASSERT_EQ(lhs[r], ra[r] + rb[r]);
    RatVector k(8);
    for (const auto& v : kb) {
      int c = coef(rng);
      for (std::size_t i = 0; i < 8; ++i) k[i] += Rational(c) * v[i];
    }
    Exponent pos(8), neg(8);
    for (std::size_t i = 0; i < 8; ++i) {
      int x = static_cast<int>(k[i].get_num().get_si());
      pos[i] = a[i] + std::max(x, 0);
      neg[i] = a[i] + std::max(-x, 0);
    }
    ASSERT_EQ(mu_of_exponent(pos, ctx), mu_of_exponent(neg, ctx));
  }
}

TEST(MuProperty, AdditiveOnProductsOfStandardMonomials) {
  std::mt19937_64 rng(77);
  auto G = alternating_gb();
  MuContext ctx = alternating_ctx();
  auto std4 = standard_monomials_up_to(*G, 4);
  std::uniform_int_distribution<std::size_t> pick(1, std4.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Exponent& a = std4[pick(rng)];
    const Exponent& b = std4[pick(rng)];
    QuotientElement prod = QuotientElement(G, Polynomial::monomial(a)) * QuotientElement(G, Polynomial::monomial(b));
    RatVector lhs = mu(prod, ctx).coords, ra = mu_of_exponent(a, ctx).coords, rb = mu_of_exponent(b, ctx).coords;
    for (std::size_t r = 0; r < lhs.size(); ++r) ASSERT_EQ(lhs[r], ra[r] + rb[r]);
  }
}

TEST(ImageOrder, ReversesTheMonomialOrderOnStandardMonomials) {
  MuContext ctx = alternating_ctx();
  auto G = alternating_gb();
  auto std4 = standard_monomials_up_to(*G, 4);
  int pairs = 0;
  for (std::size_t i = 0; i < std4.size(); ++i)
    for (std::size_t j = 0; j < std4.size(); ++j, ++pairs) {
      auto expect = G->order().compare(std4[j], std4[i]);
      ASSERT_EQ(compare_mu(mu_of_exponent(std4[i], ctx), mu_of_exponent(std4[j], ctx), ctx, 4), expect);
    }
  EXPECT_GE(pairs, 1000);
  EXPECT_EQ(*smallest_representative(mu_of_exponent(Exponent{0, 3, 0, 0}, ctx), ctx, 3), (Exponent{0, 0, 0, 2}));
  EXPECT_THROW(compare_mu(mu_of_exponent(Exponent{0, 0, 0, 2}, ctx), mu_of_exponent(Exponent{1, 0, 0, 0}, ctx), ctx, 1),
               BoundExceeded);
}

TEST(Certificate, AlternatingIsCertified) {
  auto G = alternating_gb();
  MuContext ctx = alternating_ctx();
  EXPECT_EQ(default_degree_bound(*G), 8);
  auto att = attained_twice_check(*G, ray_table());
  EXPECT_TRUE(att.pass);
  ASSERT_EQ(att.ties.size(), 1u);
  EXPECT_EQ(att.ties[0].first, (Exponent{0, 3, 0, 0}));
  EXPECT_EQ(att.ties[0].second, (Exponent{0, 0, 0, 2}));
  EXPECT_TRUE(leaves_check(ctx, 6).pass);
  auto cert = khovanskii_certificate(*G, ray_table(), ctx, 6);
  EXPECT_EQ(cert.verdict, Verdict::certified_up_to_bound);
  EXPECT_EQ(to_string(cert.verdict), "certified-up-to-bound");
  EXPECT_TRUE(cert.standard_vars_complete);
}

TEST(Certificate, GenericValuationIsRefuted) {
  auto G = alternating_gb();
  ValuationTable generic(RatMatrix::identity(4), ValueOrder::lex(4));
  auto att = attained_twice_check(*G, generic);
  EXPECT_FALSE(att.pass);
  EXPECT_EQ(att.witness, std::optional<std::size_t>(0));
  auto cert = khovanskii_certificate(*G, generic, alternating_ctx(), 4);
  EXPECT_EQ(cert.verdict, Verdict::refuted);
  EXPECT_NE(cert.witness_description.find("x2^3"), std::string::npos);
}

TEST(Certificate, DegenerateLeavesAreRefuted) {
  ValuationTable t = flat_table();
  auto G = square_difference_gb(t);
  EXPECT_TRUE(attained_twice_check(*G, t).pass);
  MuContext ctx = build_mu_context(G, MuOptions{IntVector{1, 1}, {}, {}});
  auto leaves = leaves_check(ctx, 2);
  EXPECT_FALSE(leaves.pass);
  ASSERT_TRUE(leaves.witness.has_value());
  EXPECT_EQ(mu_of_exponent(leaves.witness->first, ctx), mu_of_exponent(leaves.witness->second, ctx));
  EXPECT_EQ(khovanskii_certificate(*G, t, ctx, 2).verdict, Verdict::refuted);
}

TEST(Phi, AlternatingTransformation) {
  MuContext ctx = alternating_ctx();
  PhiResult phi = phi_transformation(ray_table(), ctx);
  EXPECT_TRUE(phi.consistent());
  EXPECT_EQ(phi.phi, (RatMatrix{{23, 0, 0}, {0, 0, -23}, {0, 46, 69}}));
}

TEST(Phi, MapsMuValuesToGradedValuesOnEveryMonomial) {
  std::mt19937_64 rng(8);
  struct Case {
    ValuationTable table;
    MuContext ctx;
  };
  std::vector<Case> cases = {{ray_table(), alternating_ctx()}, {pentagon_table(), pentagon_ctx_printed_W()}};
  int checked = 0;
  for (const auto& c : cases) {
    PhiResult phi = phi_transformation(c.table, c.ctx);
    ASSERT_TRUE(phi.consistent());
    RatMatrix cols = value_columns(c.table);
    for (int i = 0; i < 600; ++i, ++checked) {
      Exponent a = random_exponent(rng, c.ctx.m, 3);
      ASSERT_EQ(phi.phi.apply(mu_of_exponent(a, c.ctx).coords), cols.apply(to_rational(IntVector(a.begin(), a.end()))));
    }
  }
  EXPECT_GE(checked, 1000);
}
