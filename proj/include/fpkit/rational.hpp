#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpkit {

using BigInt = boost::multiprecision::cpp_int;

// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);

// "p/q" for non-integers, plain "p" when the denominator is one.
std::string to_string(const Rational& value);

// Accepts "p", "-p" and "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

// num/den for any nonzero den. Always build quotients through this helper:
// the two-argument Rational constructor rejects negative denominators.
Rational make_rational(BigInt num, BigInt den);

inline BigInt numerator_of(const Rational& value) {
  return boost::multiprecision::numerator(value);
}
inline BigInt denominator_of(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

BigInt ipow(const BigInt& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);
BigInt lcm(const BigInt& a, const BigInt& b);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& value);

}  // namespace fpkit
