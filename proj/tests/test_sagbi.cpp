#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace khb;
using namespace khb::testdata;

namespace {

std::vector<std::string> zv() { return zs(); }
Polynomial zpoly(const std::string& s) { return parse_polynomial(s, zv()); }

std::vector<Polynomial> elementary() { return {zpoly("z1 + z2 + z3"), zpoly("z1*z2 + z1*z3 + z2*z3"), zpoly("z1*z2*z3")}; }

}  // namespace

TEST(Subduction, PowerSumAgainstElementarySymmetric) {
  auto r = subduction(zpoly("z1^2 + z2^2 + z3^2"), elementary(), MonomialOrder::grevlex(3));
  EXPECT_TRUE(r.remainder.is_zero());
  std::map<MultiIndex, Rational> expect = {{{2, 0, 0}, 1}, {{0, 1, 0}, -2}};
  EXPECT_EQ(r.expansion, expect);
  EXPECT_TRUE(verify_subduction(zpoly("z1^2 + z2^2 + z3^2"), elementary(), MonomialOrder::grevlex(3), r).empty());
}

TEST(Subduction, NonSymmetricInputLeavesARemainder) {
  // lt(e1) = z1, so one step runs before the remainder is reached.
  auto r = subduction(zpoly("z1"), elementary(), MonomialOrder::grevlex(3));
  EXPECT_EQ(r.remainder, zpoly("-z2 - z3"));
  EXPECT_FALSE(r.remainder.is_zero());
  EXPECT_EQ(r.expansion.size(), 1u);
  EXPECT_EQ(r.expansion.at(MultiIndex{1, 0, 0}), 1);
}

TEST(Subduction, QuotientClassOfX4SquaredIsInTheSubalgebraOfX1X2X3) {
  auto G = alternating_gb(MonomialOrder::weight(RatMatrix{{0, 0, 0, 1}}, MonomialOrder::grevlex(4)));
  std::vector<QuotientElement> basis = {variable_class(G, 0), variable_class(G, 1), variable_class(G, 2)};
  QuotientElement x4 = variable_class(G, 3);
  auto r = subduction_quotient(x4 * x4, basis);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_TRUE(ideal_contains(*G, r.ideal_part));
  std::vector<Polynomial> reps = {basis[0].representative(), basis[1].representative(), basis[2].representative()};
  EXPECT_TRUE(verify_subduction((x4 * x4).representative(), reps, G->order(), r, G.get()).empty());
  // x4^2 = 4*x2^3 + x1^2*x2^2 - ... in the quotient.
  EXPECT_EQ(r.expansion.at(MultiIndex{0, 3, 0}), -4);
}

TEST(Subduction, UnderTheRayOrderX4SquaredIsStandard) {
  auto G = alternating_gb();
  std::vector<QuotientElement> basis = {variable_class(G, 0), variable_class(G, 1), variable_class(G, 2)};
  QuotientElement x4 = variable_class(G, 3);
  auto r = subduction_quotient(x4 * x4, basis);
  EXPECT_EQ(r.remainder, parse_polynomial("x4^2", xs()));
}

TEST(Quotient, ArithmeticChecksTheIdeal) {
  auto G1 = alternating_gb();
  auto G2 = alternating_gb(m_order());
  EXPECT_THROW(variable_class(G1, 0) + variable_class(G2, 0), std::invalid_argument);
  QuotientElement a = variable_class(G1, 1);
  EXPECT_EQ((a * a * a).representative(), normal_form(parse_polynomial("x2^3", xs()), *G1));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(FactorOverLeads, FindsOrRejectsMultiIndices) {
  auto o = MonomialOrder::grevlex(2);
  std::vector<Exponent> leads = {{2, 0}, {0, 3}, {1, 1}};
  auto f = factor_over_leads(Exponent{3, 1}, leads, o);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, (MultiIndex{1, 0, 1}));
  EXPECT_FALSE(factor_over_leads(Exponent{1, 0}, leads, o).has_value());
  EXPECT_EQ(*factor_over_leads(Exponent{0, 0}, leads, o), (MultiIndex{0, 0, 0}));
}

TEST(StandardVariables, Examples) {
  std::vector<std::string> v = {"x1", "x2"};
  GroebnerBasis G = buchberger(Ideal(2, {parse_polynomial("x1 - x2^2", v)}), MonomialOrder::lex(2));
  EXPECT_EQ(standard_variable_set(G), (std::vector<std::size_t>{1}));
  EXPECT_EQ(standard_variable_set(*alternating_gb()), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(standard_variable_set(buchberger(Ideal(3, {}), MonomialOrder::lex(3))), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Minimality, CuspKeepsBothGenerators) {
  std::vector<std::string> v = {"x", "y"};
  Ideal I(2, {parse_polynomial("x^3 - y^2", v)});
  ValuationTable t(RatMatrix{{2, 3}}, ValueOrder::lex(1), IntVector{2, 3});
  auto r = minimality_reduce(I, {0, 1}, t, MonomialOrder::grevlex(2));
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(r.dropped.empty());
}

TEST(Minimality, ProductGeneratorIsDropped) {
  std::vector<std::string> v = {"x", "y", "z"};
  Ideal I(3, {parse_polynomial("z - x*y", v)});
  ValuationTable t(RatMatrix{{1, 0, 1}, {0, 1, 1}}, ValueOrder::lex(2), IntVector{1, 1, 2});
  auto r = minimality_reduce(I, {0, 1, 2}, t, MonomialOrder::grevlex(3));
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.dropped, (std::vector<std::size_t>{2}));
}

TEST(Minimality, AlternatingGeneratorsAreMinimal) {
  auto r = minimality_reduce(Ideal(4, {alternating_relation()}), {0, 1, 2, 3}, ray_table(), MonomialOrder::grevlex(4));
  EXPECT_EQ(r.kept.size(), 4u);
  EXPECT_TRUE(r.dropped.empty());
  auto G = alternating_gb();
  std::vector<QuotientElement> classes;
  for (std::size_t i = 0; i < 4; ++i) classes.push_back(variable_class(G, i));
  EXPECT_TRUE(minimality_reduce(classes, ray_table(), MonomialOrder::grevlex(4)).dropped.empty());
}

TEST(SubductionProperty, AmbientPostconditions) {
  std::mt19937_64 rng(424242);
  auto o = MonomialOrder::grevlex(3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Polynomial> basis;
    std::uniform_int_distribution<int> count(1, 3);
    for (int k = count(rng); k > 0; --k) {
      Polynomial g = random_polynomial(rng, 3, 2, 2, 3);
      if (g.is_zero() || total_degree(leading_monomial(g, o)) == 0) g += Polynomial::variable(3, k % 3);
      basis.push_back(g);
    }
    Polynomial f = random_polynomial(rng, 3, 4, 3);
    auto r = subduction(f, basis, o);
    ASSERT_EQ(oracle::expand(r.expansion, basis, 3) + r.remainder, f);
    std::vector<Exponent> leads;
    for (const auto& g : basis) leads.push_back(leading_monomial(g, o));
    std::map<Exponent, bool> memo;
    for (const auto& [e, c] : r.remainder.terms()) ASSERT_FALSE(oracle::in_monoid(e, leads, memo));
    if (!f.is_zero()) {
      for (const auto& [alpha, c] : r.expansion)
        ASSERT_FALSE(o.less(leading_monomial(f, o), leading_monomial(oracle::expand({{alpha, 1}}, basis, 3), o)));
    }
    ASSERT_TRUE(verify_subduction(f, basis, o, r).empty());
  }
}

TEST(SubductionProperty, QuotientPostconditions) {
  std::mt19937_64 rng(7);
  auto G = alternating_gb(MonomialOrder::weight(RatMatrix{{0, 0, 0, 1}}, MonomialOrder::grevlex(4)));
  auto G2 = alternating_gb();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& gb = (trial % 2 == 0) ? G : G2;
    std::vector<QuotientElement> basis = {variable_class(gb, 0), variable_class(gb, 1), variable_class(gb, 2)};
    std::vector<Polynomial> reps;
    for (const auto& b : basis) reps.push_back(b.representative());
    QuotientElement e(gb, random_polynomial(rng, 4, 4, 2));
    auto r = subduction_quotient(e, basis);
    ASSERT_EQ(oracle::expand(r.expansion, reps, 4) + r.remainder + r.ideal_part, e.representative());
    ASSERT_TRUE(ideal_contains(*gb, r.ideal_part));
    for (const auto& [ex, c] : r.remainder.terms()) {
      ASSERT_TRUE(is_standard_monomial(ex, *gb));
      ASSERT_NE(ex[3], 0);  // anything free of x4 is a product of the basis leads
    }
    ASSERT_TRUE(verify_subduction(e.representative(), reps, gb->order(), r, gb.get()).empty());
  }
}
