#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace weylva {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Generalized binomial C(n, k) = n(n-1)...(n-k+1)/k! for any integer n; zero for k < 0.
Integer binomial(long n, long k);

Integer factorial(long n);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace weylva
