#include "polytoric/rational.hpp"

#include <cctype>
#include <cstdio>

#include "polytoric/errors.hpp"

namespace polytoric {
namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_decimal_integer(num)) {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));

  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string approx_string(const Rational& r) {
  mpf_class f(r, 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.12Fg", f.get_mpf_t());
  return std::string(buf) + "~";
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer& n = r.get_num();
  const Integer& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  Rational s(sqrt(n), sqrt(d));
  s.canonicalize();
  return s;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

}  // namespace polytoric
