#include "fpkit/rational.hpp"

#include <limits>
#include <stdexcept>

namespace fpkit {

namespace {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text.front() == '+' ? text.substr(1) : text));
}

}  // namespace

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (is_integer(value)) {
    return numerator_of(value).str();
  }
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_bigint(text));
  }
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) {
    throw std::domain_error("zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

bool is_integer(const Rational& value) { return denominator_of(value) == 1; }

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational rpow(const Rational& base, unsigned exponent) {
  return make_rational(ipow(numerator_of(base), exponent), ipow(denominator_of(base), exponent));
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) {
    return 0;
  }
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt result = abs(a) / g * abs(b);
  return result;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace fpkit
