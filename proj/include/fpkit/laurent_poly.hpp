#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fpkit/rational.hpp"

namespace fpkit {

// Integer Laurent polynomial in one formal variable. Used both for the
// chi_y genus (variable y) and for characters in Z[t, t^-1] (variable t).
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& value);
  static LaurentPoly monomial(int exponent, const BigInt& coefficient = 1);

  const Terms& terms() const { return terms_; }
  BigInt coefficient(int exponent) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  // Both return 0 for the zero polynomial.
  int degree() const;
  int low_degree() const;

  void add_term(int exponent, const BigInt& coefficient);

  Rational evaluate(const Rational& point) const;

  // Reflection p(v) -> v^shift * p(1/v).
  LaurentPoly reflected(int shift) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Ascending powers, e.g. "1 - y + y^2".
  std::string to_string(std::string_view variable = "y") const;

 private:
  Terms terms_;
};

}  // namespace fpkit
