#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace khb;
using namespace khb::testdata;

namespace {

Ideal random_ideal(std::mt19937_64& rng, std::size_t n) {
  // Sparse generators keep the bases small enough for 120 runs.
  std::uniform_int_distribution<int> count(1, 3), terms(1, 3);
  std::vector<Polynomial> gens;
  for (int k = count(rng); k > 0; --k) gens.push_back(random_polynomial(rng, n, terms(rng), 2, 3));
  return Ideal(n, gens);
}

}  // namespace

TEST(Groebner, TwistedCubicKernel) {
  auto t = Polynomial::variable(1, 0);
  GroebnerBasis G = kernel_groebner({t, t.pow(2), t.pow(3)}, MonomialOrder::grevlex(3));
  std::vector<std::string> v = {"x", "y", "z"};
  std::vector<Polynomial> expect = {parse_polynomial("x^2 - y", v), parse_polynomial("x*y - z", v),
                                    parse_polynomial("y^2 - x*z", v)};
  ASSERT_EQ(G.size(), 3u);
  for (const auto& e : expect) EXPECT_NE(std::find(G.elements().begin(), G.elements().end(), e), G.elements().end());
}

TEST(Groebner, AlternatingKernelIsThePrincipalRelation) {
  auto G = alternating_gb();
  ASSERT_EQ(G->size(), 1u);
  EXPECT_EQ(G->elements()[0],
            parse_polynomial("x2^3 + 1/4*x4^2 - 1/4*x1^2*x2^2 - 9/2*x1*x2*x3 + x1^3*x3 + 27/4*x3^2", xs()));
  EXPECT_EQ(G->leading_monomials()[0], (Exponent{0, 3, 0, 0}));
  EXPECT_TRUE(substitute(G->elements()[0], alternating_targets()).is_zero());
  EXPECT_EQ(G->max_degree(), 4);
}

TEST(Groebner, PentagonKernelElementsVanish) {
  auto G = pentagon_gb();
  ASSERT_FALSE(G->is_zero_ideal());
  for (const auto& g : G->elements()) EXPECT_TRUE(substitute(g, pentagon_targets()).is_zero());
  EXPECT_TRUE(satisfies_buchberger_criterion(*G));
}

TEST(Groebner, ZeroIdealAndUnitIdeal) {
  GroebnerBasis Z = buchberger(Ideal(3, {}), MonomialOrder::grevlex(3));
  EXPECT_TRUE(Z.is_zero_ideal());
  auto f = parse_polynomial("x^2 + y", {"x", "y", "z"});
  EXPECT_EQ(normal_form(f, Z), f);
  EXPECT_TRUE(buchberger(Ideal(3, {Polynomial(3)}), MonomialOrder::lex(3)).is_zero_ideal());

  GroebnerBasis U = buchberger(Ideal(3, {f, f + Polynomial::constant(3, 1)}), MonomialOrder::lex(3));
  ASSERT_EQ(U.size(), 1u);
  EXPECT_EQ(U.elements()[0], Polynomial::constant(3, 1));
  EXPECT_TRUE(normal_form(f, U).is_zero());
}

TEST(Groebner, LeadTermInTheQuotient) {
  auto G = alternating_gb(m_order());
  auto lt = lead_term_quotient(QuotientElement(G, parse_polynomial("x2^3", xs())));
  EXPECT_EQ(lt.exponent, (Exponent{0, 0, 0, 2}));
  EXPECT_EQ(lt.coefficient, q("-1/4"));
  EXPECT_THROW(lead_term_quotient(QuotientElement(G, G->elements()[0])), std::invalid_argument);
}

TEST(Groebner, StandardMonomialsAvoidLeadingMonomials) {
  auto G = alternating_gb();
  auto std3 = standard_monomials_up_to(*G, 3);
  auto all3 = monomials_up_to(4, 3);
  EXPECT_EQ(all3.size(), 35u);
  // x2^3 is the only non-standard monomial of degree <= 3.
  EXPECT_EQ(std3.size(), 34u);
  EXPECT_FALSE(is_standard_monomial(Exponent{0, 3, 0, 0}, *G));
  for (std::size_t i = 1; i < std3.size(); ++i) EXPECT_TRUE(G->order().less(std3[i - 1], std3[i]));
}

TEST(GroebnerProperty, RandomIdealsSatisfyBuchbergerAndDivisionOracle) {
  std::mt19937_64 rng(31337);
  std::vector<MonomialOrder> orders = {MonomialOrder::lex(3), MonomialOrder::grevlex(3), MonomialOrder::grlex(3)};
  int nontrivial = 0, reductions = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Ideal I = random_ideal(rng, 3);
    const auto& o = orders[trial % 3];
    GroebnerBasis G = buchberger(I, o);
    if (G.size() >= 2) ++nontrivial;
    // Reduced and a basis: leads pairwise non-dividing, every S-pair reduces to 0.
    for (std::size_t i = 0; i < G.size(); ++i) {
      EXPECT_EQ(leading_term(G.elements()[i], o).coefficient, 1);
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i != j) {
          EXPECT_FALSE(divides(G.leading_monomials()[i], G.leading_monomials()[j]));
        }
      }
      for (std::size_t j = i + 1; j < G.size(); ++j)
        EXPECT_TRUE(oracle::remainder(s_polynomial(G.elements()[i], G.elements()[j], o), G.elements(), o).is_zero());
    }
    for (const auto& g : I.generators) EXPECT_TRUE(oracle::remainder(g, G.elements(), o).is_zero());
    // Order of generators does not matter for a reduced basis.
    auto shuffled = I.generators;
    std::reverse(shuffled.begin(), shuffled.end());
    EXPECT_EQ(buchberger(Ideal(3, shuffled), o).elements(), G.elements());

    for (int k = 0; k < 10; ++k, ++reductions) {
      Polynomial f = random_polynomial(rng, 3, 4, 3), g = random_polynomial(rng, 3, 3, 3);
      Polynomial nf = normal_form(f, G);
      ASSERT_EQ(normal_form(nf, G), nf);
      ASSERT_EQ(nf, oracle::remainder(f, G.elements(), o));
      ASSERT_EQ(normal_form(f + g * Polynomial::constant(3, 3), G), nf + normal_form(g, G) * Polynomial::constant(3, 3));
      for (const auto& [e, c] : nf.terms()) ASSERT_TRUE(is_standard_monomial(e, G));
    }
  }
  EXPECT_GE(reductions, 1000);
  EXPECT_GE(nontrivial, 40);
}
