#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace khb {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer lcm_of_denominators(const RatVector& v);

/// gcd of the entries (nonnegative; gcd of the empty/zero vector is 0).
Integer gcd_of(const IntVector& v);

Integer factorial(std::size_t n);

}  // namespace khb
