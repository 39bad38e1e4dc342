#include "vcwl/rational.hpp"

#include <cctype>

#include "vcwl/error.hpp"

namespace vcwl {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError("malformed rational '" + s + "'", i);
    }
  }
  if (!seen_digit) throw ParseError("malformed rational '" + s + "'", s.size());
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", s.find('/'));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace vcwl
