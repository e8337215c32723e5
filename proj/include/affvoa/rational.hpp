#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affvoa {

using Rational = mpq_class;

/// Renders as `p` or `p/q` in lowest terms.
std::string to_string(const Rational& q);

/// Accepts `p`, `-p`, `p/q`; throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// n/d in lowest terms.
inline Rational frac(long n, long d) {
  Rational q{mpz_class(n), mpz_class(d)};
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace affvoa
