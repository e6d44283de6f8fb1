#include "khb/sagbi.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace khb {

QuotientElement::QuotientElement(std::shared_ptr<const GroebnerBasis> gb, const Polynomial& f)
    : gb_(std::move(gb)), rep_(normal_form(f, *gb_)) {}

namespace {

void check_same_ideal(const QuotientElement& a, const QuotientElement& b) {
  if (a.ideal_basis_ptr() != b.ideal_basis_ptr() && !(a.ideal_basis().elements() == b.ideal_basis().elements() &&
                                                      a.ideal_basis().order() == b.ideal_basis().order()))
    throw std::invalid_argument("quotient elements from different presentations");
}

}  // namespace

QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
  check_same_ideal(a, b);
  return QuotientElement(a.gb_, a.rep_ + b.rep_);
}

QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
  check_same_ideal(a, b);
  return QuotientElement(a.gb_, a.rep_ - b.rep_);
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
  check_same_ideal(a, b);
  return QuotientElement(a.gb_, a.rep_ * b.rep_);
}

QuotientElement variable_class(const std::shared_ptr<const GroebnerBasis>& gb, std::size_t i) {
  return QuotientElement(gb, Polynomial::variable(gb->nvars(), i));
}

QuotientLeadTerm lead_term_quotient(const QuotientElement& e) {
  if (e.is_zero()) throw std::invalid_argument("lead_term_quotient: zero class");
  Term t = leading_term(e.representative(), e.ideal_basis().order());
  return {t.exponent, t.coefficient};
}

std::optional<MultiIndex> factor_over_leads(const Exponent& target, const std::vector<Exponent>& leads,
                                            const MonomialOrder& order) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < leads.size(); ++j)
    if (total_degree(leads[j]) > 0) idx.push_back(j);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order.less(leads[b], leads[a]); });

  MultiIndex alpha(leads.size(), 0);
  std::set<std::pair<std::size_t, Exponent>> dead;
  std::function<bool(std::size_t, const Exponent&)> search = [&](std::size_t k, const Exponent& rest) -> bool {
    if (total_degree(rest) == 0) return true;
    if (k == idx.size()) return false;
    if (dead.count({k, rest})) return false;
    const Exponent& l = leads[idx[k]];
    int most = std::numeric_limits<int>::max();
    for (std::size_t c = 0; c < l.size(); ++c)
      if (l[c] > 0) most = std::min(most, rest[c] / l[c]);
    for (int mult = most; mult >= 0; --mult) {
      Exponent next = rest;
      for (std::size_t c = 0; c < l.size(); ++c) next[c] -= mult * l[c];
      alpha[idx[k]] = mult;
      if (search(k + 1, next)) return true;
    }
    alpha[idx[k]] = 0;
    dead.insert({k, rest});
    return false;
  };
  if (search(0, target)) return alpha;
  return std::nullopt;
}

namespace {

// prod basis[j]^alpha[j], with per-element power caches.
class PowerProducts {
 public:
  PowerProducts(const std::vector<Polynomial>& basis, std::size_t nvars) : basis_(basis), nvars_(nvars), cache_(basis.size()) {}

  Polynomial product(const MultiIndex& alpha) {
    Polynomial p = Polynomial::constant(nvars_, 1);
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (alpha[j] > 0) p = p * power(j, alpha[j]);
    return p;
  }

 private:
  const Polynomial& power(std::size_t j, int k) {
    auto& pv = cache_[j];
    if (pv.empty()) pv.push_back(Polynomial::constant(nvars_, 1));
    while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * basis_[j]);
    return pv[static_cast<std::size_t>(k)];
  }

  const std::vector<Polynomial>& basis_;
  std::size_t nvars_;
  std::vector<std::vector<Polynomial>> cache_;
};

Polynomial drop_leading(const Polynomial& p, const Term& lt) {
  return p - Polynomial::monomial(lt.exponent, lt.coefficient);
}

Rational lead_coefficient_of_product(const std::vector<Term>& leads, const MultiIndex& alpha) {
  Rational c = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (int k = 0; k < alpha[j]; ++k) c *= leads[j].coefficient;
  return c;
}

Exponent lead_of_product(const std::vector<Exponent>& leads, const MultiIndex& alpha, std::size_t nvars) {
  Exponent e(nvars, 0);
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (std::size_t c = 0; c < nvars; ++c) e[c] += alpha[j] * leads[j][c];
  return e;
}

}  // namespace

SubductionResult subduction(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  const std::size_t n = f.nvars();
  std::vector<Term> leads;
  std::vector<Exponent> lead_exps;
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("subduction: zero basis element");
    if (g.nvars() != n) throw std::invalid_argument("subduction: ring mismatch");
    leads.push_back(leading_term(g, order));
    lead_exps.push_back(leads.back().exponent);
  }
  SubductionResult res{{}, Polynomial(n), Polynomial(n)};
  PowerProducts powers(basis, n);
  Polynomial p = f;
  while (!p.is_zero()) {
    Term lt = leading_term(p, order);
    auto alpha = factor_over_leads(lt.exponent, lead_exps, order);
    if (!alpha) {
      res.remainder += Polynomial::monomial(lt.exponent, lt.coefficient);
      p = drop_leading(p, lt);
      continue;
    }
    Rational c = lt.coefficient / lead_coefficient_of_product(leads, *alpha);
    p -= powers.product(*alpha) * c;
    res.expansion[*alpha] += c;
  }
  return res;
}

SubductionResult subduction_quotient(const QuotientElement& e, const std::vector<QuotientElement>& basis) {
  const GroebnerBasis& G = e.ideal_basis();
  const MonomialOrder& order = G.order();
  const std::size_t n = G.nvars();
  std::vector<Polynomial> reps;
  std::vector<Term> leads;
  std::vector<Exponent> lead_exps;
  for (const auto& b : basis) {
    check_same_ideal(e, b);
    if (b.is_zero()) throw std::invalid_argument("subduction_quotient: zero basis class");
    reps.push_back(b.representative());
    leads.push_back(leading_term(reps.back(), order));
    lead_exps.push_back(leads.back().exponent);
  }
  SubductionResult res{{}, Polynomial(n), Polynomial(n)};
  PowerProducts powers(reps, n);
  Polynomial p = e.representative();
  while (!p.is_zero()) {
    Term lt = leading_term(p, order);
    auto alpha = factor_over_leads(lt.exponent, lead_exps, order);
    if (!alpha) {
      res.remainder += Polynomial::monomial(lt.exponent, lt.coefficient);
      p = drop_leading(p, lt);
      continue;
    }
    Rational c = lt.coefficient / lead_coefficient_of_product(leads, *alpha);
    Polynomial t = p - powers.product(*alpha) * c;
    Polynomial next = normal_form(t, G);
    res.ideal_part += t - next;
    res.expansion[*alpha] += c;
    p = std::move(next);
  }
  if (!normal_form(res.ideal_part, G).is_zero()) throw std::logic_error("subduction_quotient: ideal part not in I");
  return res;
}

std::vector<std::string> verify_subduction(const Polynomial& f, const std::vector<Polynomial>& basis,
                                           const MonomialOrder& order, const SubductionResult& result,
                                           const GroebnerBasis* gb) {
  std::vector<std::string> failures;
  const std::size_t n = f.nvars();
  std::vector<Exponent> lead_exps;
  for (const auto& g : basis) lead_exps.push_back(leading_monomial(g, order));

  for (const auto& [alpha, c] : result.expansion) {
    if (alpha.size() != basis.size()) failures.push_back("(1) multi-index length differs from basis size");
    if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; }))
      failures.push_back("(1) negative multi-index entry");
    if (c == 0) failures.push_back("(2) zero coefficient stored");
  }
  if (!failures.empty()) return failures;

  PowerProducts powers(basis, n);
  Polynomial rebuilt = result.remainder + result.ideal_part;
  for (const auto& [alpha, c] : result.expansion) rebuilt += powers.product(alpha) * c;
  if (!(rebuilt == f)) failures.push_back("reconstruction identity fails");

  const bool f_zero = f.is_zero();
  if (!result.remainder.is_zero()) {
    if (f_zero || order.less(leading_monomial(f, order), leading_monomial(result.remainder, order)))
      failures.push_back("(3) lt(r) > lt(f)");
    for (const auto& t : result.remainder.terms()) {
      if (factor_over_leads(t.exponent, lead_exps, order)) {
        failures.push_back("(4) remainder term lies in the lead-term algebra");
        break;
      }
      if (gb && !is_standard_monomial(t.exponent, *gb)) {
        failures.push_back("remainder term is not a standard monomial");
        break;
      }
    }
  }
  std::set<Exponent> seen;
  for (const auto& [alpha, c] : result.expansion) {
    Exponent lm = lead_of_product(lead_exps, alpha, n);
    if (f_zero || order.less(leading_monomial(f, order), lm)) failures.push_back("(5) lt(g^alpha) > lt(f)");
    if (!seen.insert(lm).second) failures.push_back("(6) repeated lm(g^alpha)");
  }
  if (gb) {
    if (!normal_form(result.ideal_part, *gb).is_zero()) failures.push_back("h is not in I");
  } else if (!result.ideal_part.is_zero()) {
    failures.push_back("ambient subduction produced an ideal part");
  }
  return failures;
}

std::vector<std::size_t> standard_variable_set(const GroebnerBasis& G) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < G.nvars(); ++i) {
    Exponent e(G.nvars(), 0);
    e[i] = 1;
    if (is_standard_monomial(e, G)) out.push_back(i);
  }
  return out;
}

MinimalityResult minimality_reduce(const Ideal& presentation, const std::vector<std::size_t>& basis_indices,
                                   const ValuationTable& table, const MonomialOrder& tiebreak) {
  const std::size_t n = presentation.nvars;
  MinimalityResult res;
  std::vector<std::size_t> kept = basis_indices;
  std::sort(kept.begin(), kept.end());
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    const std::size_t i = *it;
    RatMatrix row(1, n);
    row(0, i) = 1;
    MonomialOrder order = valuation_induced_order(table, MonomialOrder::weight(row, tiebreak));
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(presentation, order));
    std::vector<QuotientElement> others;
    for (auto j : kept)
      if (j != i && std::find(res.dropped.begin(), res.dropped.end(), j) == res.dropped.end())
        others.push_back(variable_class(gb, j));
    QuotientElement xi = variable_class(gb, i);
    if (xi.is_zero()) {
      res.dropped.push_back(i);
      continue;
    }
    if (subduction_quotient(xi, others).remainder.is_zero()) res.dropped.push_back(i);
  }
  for (auto j : kept)
    if (std::find(res.dropped.begin(), res.dropped.end(), j) == res.dropped.end()) res.kept.push_back(j);
  std::sort(res.dropped.begin(), res.dropped.end());
  return res;
}

MinimalityResult minimality_reduce(const std::vector<QuotientElement>& basis, const ValuationTable& table,
                                   const MonomialOrder& tiebreak) {
  if (basis.empty()) return {};
  std::vector<std::size_t> indices;
  for (const auto& b : basis) {
    const auto& rep = b.representative();
    if (!rep.is_monomial() || rep.terms().front().coefficient != 1 || total_degree(rep.terms().front().exponent) != 1)
      throw std::invalid_argument("minimality_reduce: basis element is not a variable class");
    const auto& e = rep.terms().front().exponent;
    indices.push_back(static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin()));
  }
  return minimality_reduce(basis.front().ideal_basis().ideal(), indices, table, tiebreak);
}

}  // namespace khb
