#pragma once

#include "khb/groebner.hpp"
#include "khb/khovanskii.hpp"
#include "khb/okounkov.hpp"
#include "khb/session.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace khb::testdata {

inline std::vector<std::string> xs() { return {"x1", "x2", "x3", "x4"}; }
inline std::vector<std::string> zs() { return {"z1", "z2", "z3"}; }

/// e1, e2, e3 and the Vandermonde product y in Q[z1,z2,z3].
inline std::vector<Polynomial> alternating_targets() {
  auto z = zs();
  return {parse_polynomial("z1 + z2 + z3", z), parse_polynomial("z1*z2 + z1*z3 + z2*z3", z),
          parse_polynomial("z1*z2*z3", z), parse_polynomial("(z1 - z2)*(z1 - z3)*(z2 - z3)", z)};
}

/// The relation among e1, e2, e3, y (discriminant identity).
inline Polynomial alternating_relation() {
  return parse_polynomial("x1^2*x2^2 - 4*x2^3 - 4*x3*x1^3 + 18*x1*x2*x3 - 27*x3^2 - x4^2", xs());
}

inline IntVector alternating_degrees() { return {1, 2, 3, 3}; }

inline ValuationTable ray_table() {
  return ValuationTable(RatMatrix{{-3, -6, 14, -9}, {22, -2, -3, -3}}, ValueOrder::lex(2), alternating_degrees());
}

inline MonomialOrder ray_order(const MonomialOrder& tiebreak = MonomialOrder::grevlex(4)) {
  return valuation_induced_order(ray_table(), tiebreak);
}

inline std::shared_ptr<const GroebnerBasis> alternating_gb(const MonomialOrder& order = ray_order()) {
  return std::make_shared<const GroebnerBasis>(buchberger(Ideal(4, {alternating_relation()}), order));
}

/// M = [[0,2,2,3],[1,4,1,6]] refined by grevlex.
inline MonomialOrder m_order() {
  return MonomialOrder::weight(RatMatrix{{0, 2, 2, 3}, {1, 4, 1, 6}}, MonomialOrder::grevlex(4));
}

// The eight-generator toric example: generators s^d x^a y^b.
inline IntVector pentagon_degrees() { return {1, 1, 1, 1, 1, 1, 2, 3}; }
inline RatMatrix pentagon_values() {
  return RatMatrix{{1, 1, 1, 1, 1, 1, 2, 3}, {1, 2, 0, 1, 2, 3, 1, 4}, {1, 0, 3, 2, 1, 0, 3, 1}};
}

inline ValuationTable pentagon_table() {
  return ValuationTable(pentagon_values().row_block(1, 2), ValueOrder(RatMatrix{{-1, -1}, {-1, 0}}), pentagon_degrees());
}

inline std::vector<Polynomial> pentagon_targets() {
  RatMatrix v = pentagon_values();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < 8; ++i)
    out.push_back(Polynomial::monomial({static_cast<int>(v(0, i).get_num().get_si()),
                                        static_cast<int>(v(1, i).get_num().get_si()),
                                        static_cast<int>(v(2, i).get_num().get_si())}));
  return out;
}

inline std::shared_ptr<const GroebnerBasis> pentagon_gb(const MonomialOrder& tiebreak = MonomialOrder::grevlex(8)) {
  return std::make_shared<const GroebnerBasis>(
      kernel_groebner(pentagon_targets(), valuation_induced_order(pentagon_table(), tiebreak)));
}

/// The printed 8 x 8 matrix W: columns 1-5 span K, column 6 is d.
inline RatMatrix pentagon_W() {
  return RatMatrix{{1, 2, 3, -3, -4, 1, 0, 0},   {-1, -2, -3, 1, 0, 1, 0, 0}, {-1, -1, -1, 0, 1, 1, 0, 0},
                   {1, 0, 0, 0, 0, 1, 0, 0},     {0, 1, 0, 0, 0, 1, 0, 0},    {0, 0, 1, 0, 0, 1, 2, 3},
                   {0, 0, 0, 1, 0, 2, -1, 0},    {0, 0, 0, 0, 1, 3, 0, -1}};
}

inline Lattice pentagon_K() {
  RatMatrix W = pentagon_W();
  std::vector<RatVector> cols;
  for (std::size_t j = 0; j < 5; ++j) cols.push_back(W.column(j));
  return Lattice::from_generators(cols, 8);
}

inline RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }
inline Rational q(const char* s) { return parse_rational(s); }

inline std::string fixture_path(const std::string& name) { return std::string(KHB_FIXTURE_DIR) + "/" + name; }

// Random helpers shared by the property suites.
inline Exponent random_exponent(std::mt19937_64& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> d(0, max_entry);
  Exponent e(n);
  for (auto& x : e) x = d(rng);
  return e;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, int terms, int max_entry, int coeff = 5) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  Polynomial f(n);
  for (int t = 0; t < terms; ++t) {
    int k = c(rng);
    if (k != 0) f += Polynomial::monomial(random_exponent(rng, n, max_entry), k);
  }
  return f;
}

}  // namespace khb::testdata
