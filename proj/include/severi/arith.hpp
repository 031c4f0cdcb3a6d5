#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace severi {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

const Integer& factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace severi
