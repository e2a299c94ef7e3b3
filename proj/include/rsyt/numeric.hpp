#pragma once

// Exact arithmetic vocabulary shared by every module: GMP-backed rationals and
// big integers, plus the handful of combinatorial counting helpers we need.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace rsyt {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// "p/q" (or "p" when q == 1).  This is the interchange format for every
/// rational that leaves the library.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.  Throws
/// rsyt::Error(BadInput) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(const BigInt& n, unsigned k);
inline BigInt binomial(unsigned long n, unsigned k) { return binomial(BigInt(n), k); }
BigInt catalan(unsigned n);

Rational pow(const Rational& base, unsigned exponent);

/// Least positive integer L such that L * q is integral for every q.
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace rsyt
