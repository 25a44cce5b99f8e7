#pragma once

#include <gmpxx.h>

#include <string>

namespace matchpoly {

// All certified arithmetic runs over GMP rationals/integers. No floating
// point is used anywhere in result-producing paths.
using Integer = mpz_class;
using Rational = mpq_class;

// den must be nonzero; result is canonicalized.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

// Parses decimal strings (optionally signed numerator).
Rational parse_rational(const std::string& num, const std::string& den);

std::string decimal(const Integer& z);
std::string decimal_num(const Rational& q);
std::string decimal_den(const Rational& q);

// Compact "p/q" (or just "p" when q == 1).
std::string rational_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Integer factorial(unsigned long n);
Integer int_pow(const Integer& base, unsigned long e);
Rational rat_pow(const Rational& base, unsigned long e);

// Falling factorial b(b-1)...(b-k+1); (b)_0 = 1.
Integer falling_factorial(long b, unsigned long k);

}  // namespace matchpoly
