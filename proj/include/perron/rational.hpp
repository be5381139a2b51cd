#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace perron {

/// Arbitrary-precision natural / integer.
using Natural = mpz_class;

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a non-negative decimal integer.
Natural parse_natural(std::string_view text);

/// Prints "num/den" in lowest terms; integers keep the "/1" suffix.
std::string to_string(const Rational& q);

std::string to_string(const Natural& n);

/// floor(q) for any rational.
Natural floor(const Rational& q);

bool is_integer(const Rational& q);

/// Natural logarithm of a positive rational, accurate for operands far outside
/// the double range (numerator and denominator are scaled separately).
double log(const Rational& q);

double log(const Natural& n);

/// q^alpha as a double for q > 0; 0 for q == 0.
double pow(const Rational& q, double alpha);

/// Nearest double.
double to_double(const Rational& q);

}  // namespace perron
