#include "affvoa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace affvoa {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto check_int = [&](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check_int(num, true);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(mpz_class(num));
  } else {
    std::string den = s.substr(slash + 1);
    check_int(den, false);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q = Rational(mpz_class(num), d);
    q.canonicalize();
  }
  return q;
}

}  // namespace affvoa
