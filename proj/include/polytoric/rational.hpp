#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace polytoric {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "p/q" (optional leading sign, decimal digits only).
/// Throws ParseError on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Decimal rendering for display only: 12 significant digits plus a
/// trailing "~" marking it as approximate.
std::string approx_string(const Rational& r);

/// Exact square root when `r` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

Integer ceil(const Rational& r);
Integer floor(const Rational& r);

/// num/den in lowest terms; den must be nonzero.
inline Rational frac(long num, long den) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace polytoric
