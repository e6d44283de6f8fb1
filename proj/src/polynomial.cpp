#include "khb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace khb {

namespace {

bool lex_greater(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Exponent(nvars, 0), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponent.size() != nvars) throw std::invalid_argument("from_terms: exponent length mismatch");
    for (int x : t.exponent)
      if (x < 0) throw std::invalid_argument("negative exponent");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return lex_greater(a.exponent, b.exponent); });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, khb::total_degree(t.exponent));
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  for (const auto& t : terms_)
    if (t.exponent == e) return t.coefficient;
  return 0;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::add_scaled(const Polynomial& o, const Rational& scale) {
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && lex_greater(terms_[i].exponent, o.terms_[j].exponent))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || lex_greater(o.terms_[j].exponent, terms_[i].exponent)) {
      out.push_back({o.terms_[j].exponent, o.terms_[j].coefficient * scale});
      ++j;
    } else {
      Rational c = terms_[i].coefficient + o.terms_[j].coefficient * scale;
      if (c != 0) out.push_back({std::move(terms_[i].exponent), c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return add_scaled(o, 1); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return add_scaled(o, -1); }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Exponent& e, const Rational& c) const {
  Polynomial p(nvars_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves lex order.
  for (const auto& t : terms_) p.terms_.push_back({add(t.exponent, e), t.coefficient * c});
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::map<Exponent, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[add(s.exponent, t.exponent)] += s.coefficient * t.coefficient;
  Polynomial p(a.nvars_);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) p.terms_.push_back({it->first, it->second});
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::embed(std::size_t total, std::size_t offset) const {
  if (offset + nvars_ > total) throw std::invalid_argument("embed: target ring too small");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e(total, 0);
    std::copy(t.exponent.begin(), t.exponent.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    ts.push_back({std::move(e), t.coefficient});
  }
  return from_terms(total, std::move(ts));
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
  if (f.nvars() != order.nvars()) throw std::invalid_argument("leading_term: order/ring mismatch");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.exponent, best->exponent) > 0) best = &t;
  return *best;
}

std::pair<Exponent, Exponent> two_leading_monomials(const Polynomial& f, const MonomialOrder& order) {
  if (f.size() < 2) throw std::invalid_argument("two_leading_monomials: fewer than two terms");
  auto ts = sorted_terms(f, order);
  return {ts[0].exponent, ts[1].exponent};
}

std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  if (f.nvars() != order.nvars()) throw std::invalid_argument("sorted_terms: order/ring mismatch");
  std::vector<Term> ts = f.terms();
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return order.compare(a.exponent, b.exponent) > 0; });
  return ts;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (images.size() != f.nvars()) throw std::invalid_argument("substitute: image count differs from variable count");
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  const std::size_t target = images.front().nvars();
  for (const auto& g : images)
    if (g.nvars() != target) throw std::invalid_argument("substitute: images live in different rings");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& pv = powers[i];
    if (pv.empty()) pv.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[i]);
    return pv[static_cast<std::size_t>(k)];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < t.exponent.size(); ++i)
      if (t.exponent[i] > 0) term = term * power(i, t.exponent[i]);
    result += term;
  }
  return result;
}

namespace {

std::string render(const std::vector<Term>& ts, const std::vector<std::string>& names) {
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts) {
    Rational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (t.exponent[i] == 0) continue;
      factors.push_back(t.exponent[i] == 1 ? names.at(i) : names.at(i) + "^" + std::to_string(t.exponent[i]));
    }
    if (factors.empty() || c != 1) {
      os << to_string(c);
      if (!factors.empty()) os << '*';
    }
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

}  // namespace

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
  if (names.size() != f.nvars()) throw std::invalid_argument("to_string: name count mismatch");
  return render(f.terms(), names);
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names, const MonomialOrder& order) {
  if (names.size() != f.nvars()) throw std::invalid_argument("to_string: name count mismatch");
  return render(sorted_terms(f, order), names);
}

std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

}  // namespace khb
