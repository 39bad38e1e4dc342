#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vcwl {

/// Exact field elements. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// Accepts "a" or "a/b" with an optional sign.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer binomial(long n, long k);

}  // namespace vcwl
