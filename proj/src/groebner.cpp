#include "khb/groebner.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace khb {

Ideal::Ideal(std::size_t n, std::vector<Polynomial> gens) : nvars(n) {
  for (auto& g : gens) {
    if (g.nvars() != n) throw std::invalid_argument("Ideal: generator in a different ring");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

namespace {

using Key = std::vector<std::int64_t>;

struct OTerm {
  Exponent exponent;
  Key key;
  Rational coefficient;
};

// Terms sorted by descending key, i.e. descending in the monomial order.
using OPoly = std::vector<OTerm>;

Key add_keys(const Key& a, const Key& b) {
  Key c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_add_overflow(a[i], b[i], &c[i])) throw std::overflow_error("monomial key overflow");
  return c;
}

OPoly to_ordered(const Polynomial& f, const MonomialOrder& order) {
  OPoly p;
  p.reserve(f.size());
  for (const auto& t : f.terms()) p.push_back({t.exponent, order.key(t.exponent), t.coefficient});
  std::sort(p.begin(), p.end(), [](const OTerm& a, const OTerm& b) { return a.key > b.key; });
  return p;
}

Polynomial from_ordered(const OPoly& p, std::size_t nvars) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p) ts.push_back({t.exponent, t.coefficient});
  return Polynomial::from_terms(nvars, std::move(ts));
}

void make_monic(OPoly& p) {
  if (p.empty() || p.front().coefficient == 1) return;
  Rational inv = 1 / p.front().coefficient;
  for (auto& t : p) t.coefficient *= inv;
}

// p - c * x^shift * g, where p's terms from index `from` on are merged (terms
// before `from` are discarded; callers use it to drop the cancelled head).
OPoly sub_shifted(const OPoly& p, std::size_t from, const Rational& c, const Exponent& shift, const Key& shift_key,
                  const OPoly& g, std::size_t g_from) {
  OPoly out;
  out.reserve(p.size() - from + g.size() - g_from);
  std::size_t i = from, j = g_from;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Key gk = add_keys(g[j].key, shift_key);
    if (i < p.size() && p[i].key > gk) {
      out.push_back(p[i++]);
    } else if (i == p.size() || gk > p[i].key) {
      out.push_back({add(g[j].exponent, shift), std::move(gk), -c * g[j].coefficient});
      ++j;
    } else {
      Rational v = p[i].coefficient - c * g[j].coefficient;
      if (v != 0) out.push_back({p[i].exponent, p[i].key, v});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Basis {
  std::vector<OPoly> polys;
  std::vector<bool> active;
};

const OPoly* find_reducer(const std::vector<OPoly>& polys, const std::vector<bool>* active, const Exponent& e,
                          std::size_t skip = static_cast<std::size_t>(-1)) {
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (k == skip || (active && !(*active)[k]) || polys[k].empty()) continue;
    if (divides(polys[k].front().exponent, e)) return &polys[k];
  }
  return nullptr;
}

// Full reduction (head and tail) of p by the given polynomials (all monic).
OPoly reduce(OPoly p, const std::vector<OPoly>& polys, const std::vector<bool>* active, const MonomialOrder& order,
             std::size_t skip = static_cast<std::size_t>(-1)) {
  OPoly result;
  while (!p.empty()) {
    const OTerm& head = p.front();
    const OPoly* g = find_reducer(polys, active, head.exponent, skip);
    if (!g) {
      result.push_back(head);
      p.erase(p.begin());
      continue;
    }
    Exponent shift = quotient(head.exponent, g->front().exponent);
    Key shift_key = order.key(shift);
    Rational c = head.coefficient;  // g is monic
    p = sub_shifted(p, 1, c, shift, shift_key, *g, 1);
  }
  return result;
}

OPoly spoly(const OPoly& f, const OPoly& g, const MonomialOrder& order) {
  Exponent l = lcm(f.front().exponent, g.front().exponent);
  Exponent sf = quotient(l, f.front().exponent), sg = quotient(l, g.front().exponent);
  Key zero(order.nrows(), 0);
  // x^sf f / lc(f) - x^sg g / lc(g)
  OPoly a;
  a.reserve(f.size());
  Rational inv_f = 1 / f.front().coefficient;
  Key kf = order.key(sf);
  for (std::size_t i = 1; i < f.size(); ++i)
    a.push_back({add(f[i].exponent, sf), add_keys(f[i].key, kf), f[i].coefficient * inv_f});
  Rational inv_g = 1 / g.front().coefficient;
  return sub_shifted(a, 0, inv_g, sg, order.key(sg), g, 1);
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Exponent lcm;
  int degree;
};

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
    : order_(std::move(order)), elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (e.nvars() != order_.nvars()) throw std::invalid_argument("GroebnerBasis: element in a different ring");
    leading_.push_back(leading_monomial(e, order_));
  }
}

int GroebnerBasis::max_degree() const {
  int d = 0;
  for (const auto& e : elements_) d = std::max(d, e.total_degree());
  return d;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.nvars != order.nvars()) throw std::invalid_argument("buchberger: order/ring mismatch");
  std::vector<OPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto lm = [&](std::size_t k) -> const Exponent& { return polys[k].front().exponent; };

  // Gebauer-Moeller update for a newly added element h.
  auto update = [&](std::size_t h) {
    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) candidates.push_back(g);
    std::vector<Exponent> lcms(polys.size());
    for (auto g : candidates) lcms[g] = lcm(lm(h), lm(g));

    // Chain criterion among new pairs, keeping coprime ones for now.
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      std::size_t g1 = candidates[a];
      bool keep = coprime(lm(h), lm(g1));
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (b == a) continue;
          std::size_t g2 = candidates[b];
          if (divides(lcms[g2], lcms[g1])) {
            // Of equal lcms keep the earliest; strictly dividing lcms always win.
            if (lcms[g2] != lcms[g1] || b < a) keep = false;
          }
        }
      }
      if (keep) kept.push_back(g1);
    }
    // Product criterion: drop coprime pairs.
    std::vector<Pair> fresh;
    for (auto g : kept)
      if (!coprime(lm(h), lm(g))) fresh.push_back({g, h, lcms[g], total_degree(lcms[g])});

    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    for (auto& p : pairs) {
      bool drop = divides(lm(h), p.lcm) && lcm(lm(p.i), lm(h)) != p.lcm && lcm(lm(p.j), lm(h)) != p.lcm;
      if (!drop) survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    for (auto& p : fresh) pairs.push_back(std::move(p));

    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && divides(lm(h), lm(g))) active[g] = false;
  };

  auto add_element = [&](OPoly p) {
    make_monic(p);
    polys.push_back(std::move(p));
    active.push_back(true);
    update(polys.size() - 1);
  };

  // Inter-reduce the input first so the starting set is small and monic.
  std::vector<OPoly> input;
  for (const auto& g : ideal.generators) input.push_back(to_ordered(g, order));
  std::sort(input.begin(), input.end(), [](const OPoly& a, const OPoly& b) {
    return std::make_tuple(a.front().key, a.size()) < std::make_tuple(b.front().key, b.size());
  });
  for (auto& g : input) {
    OPoly r = reduce(std::move(g), polys, &active, order);
    if (!r.empty()) add_element(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.degree, a.j, a.i) < std::tie(b.degree, b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    OPoly s = spoly(polys[p.i], polys[p.j], order);
    OPoly r = reduce(std::move(s), polys, &active, order);
    if (!r.empty()) add_element(std::move(r));
  }

  // Reduced basis: active elements have pairwise non-dividing leading monomials.
  std::vector<OPoly> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::vector<OPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    OPoly tail(minimal[k].begin() + 1, minimal[k].end());
    OPoly r = reduce(std::move(tail), minimal, nullptr, order, k);
    r.insert(r.begin(), minimal[k].front());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const OPoly& a, const OPoly& b) { return a.front().key < b.front().key; });
  std::vector<Polynomial> elements;
  for (const auto& r : reduced) elements.push_back(from_ordered(r, order.nvars()));
  return GroebnerBasis(order, std::move(elements));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.nvars() != G.nvars()) throw std::invalid_argument("normal_form: ring mismatch");
  if (G.is_zero_ideal() || f.is_zero()) return f;
  std::vector<OPoly> polys;
  for (const auto& g : G.elements()) polys.push_back(to_ordered(g, G.order()));
  return from_ordered(reduce(to_ordered(f, G.order()), polys, nullptr, G.order()), f.nvars());
}

bool is_standard_monomial(const Exponent& a, const GroebnerBasis& G) {
  if (a.size() != G.nvars()) throw std::invalid_argument("is_standard_monomial: length mismatch");
  for (const auto& l : G.leading_monomials())
    if (divides(l, a)) return false;
  return true;
}

std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree_bound) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  for (int deg = 0; deg <= degree_bound; ++deg) {
    // All exponents of exactly degree `deg`, lex descending.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == nvars) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (nvars == 0) {
      if (deg == 0) out.push_back(e);
      continue;
    }
    rec(0, deg);
  }
  return out;
}

std::vector<Exponent> standard_monomials_up_to(const GroebnerBasis& G, int degree_bound) {
  std::vector<Exponent> out;
  for (auto& e : monomials_up_to(G.nvars(), degree_bound))
    if (is_standard_monomial(e, G)) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return G.order().less(a, b); });
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  return from_ordered(spoly(to_ordered(f, order), to_ordered(g, order), order), f.nvars());
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(s_polynomial(G.elements()[i], G.elements()[j], G.order()), G).is_zero()) return false;
  return true;
}

GroebnerBasis kernel_groebner(const std::vector<Polynomial>& targets, const MonomialOrder& source_order) {
  const std::size_t n = source_order.nvars();
  if (targets.size() != n) throw std::invalid_argument("kernel: one target per source variable required");
  if (n == 0) return GroebnerBasis(source_order, {});
  const std::size_t s = targets.front().nvars();
  for (const auto& t : targets) {
    if (t.nvars() != s) throw std::invalid_argument("kernel: targets live in different rings");
    if (t.is_zero()) throw std::invalid_argument("kernel: zero target");
  }
  const std::size_t total = s + n;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(total, s + i) - targets[i].embed(total, 0));
  MonomialOrder elim = MonomialOrder::elimination(MonomialOrder::grevlex(s), source_order);
  GroebnerBasis big = buchberger(Ideal(total, std::move(gens)), elim);
  std::vector<Polynomial> kept;
  for (const auto& g : big.elements()) {
    bool free_of_targets = true;
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      for (std::size_t k = 0; k < s && free_of_targets; ++k)
        if (t.exponent[k]) free_of_targets = false;
      if (!free_of_targets) break;
      ts.push_back({Exponent(t.exponent.begin() + static_cast<std::ptrdiff_t>(s), t.exponent.end()), t.coefficient});
    }
    if (free_of_targets) kept.push_back(Polynomial::from_terms(n, std::move(ts)));
  }
  return GroebnerBasis(source_order, std::move(kept));
}

Ideal kernel_of_map(const std::vector<Polynomial>& targets, std::size_t source_nvars) {
  return kernel_groebner(targets, MonomialOrder::grevlex(source_nvars)).ideal();
}

}  // namespace khb
