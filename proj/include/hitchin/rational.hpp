#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hitchin {

/// Exact rational; GMP keeps every arithmetic result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "[+-]digits" or "[+-]digits/digits". Throws InputError on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

}  // namespace hitchin
