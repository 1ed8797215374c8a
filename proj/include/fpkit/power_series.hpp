#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fpkit/rational.hpp"

namespace fpkit {

// Dense polynomial with rational coefficients; coefficient i multiplies v^i.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
  RationalPolynomial(const Rational& constant) : c_{constant} { trim(); }  // NOLINT: implicit by intent

  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  bool is_zero() const { return c_.empty(); }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) {
      c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      c_[i] += o.c_[i];
    }
    trim();
    return *this;
  }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return RationalPolynomial(std::move(out));
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  // Exact division by the linear factor (v - root).
  // Throws std::domain_error if the remainder is nonzero.
  RationalPolynomial divided_by_linear(const Rational& root) const {
    if (c_.empty()) {
      return {};
    }
    // Synthetic division from the top coefficient down.
    std::vector<Rational> quotient(c_.size() - 1);
    Rational carry = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
      Rational value = c_[k] + carry * root;
      if (k == 0) {
        if (value != 0) {
          throw std::domain_error("polynomial is not divisible by the linear factor");
        }
        break;
      }
      quotient[k - 1] = value;
      carry = value;
    }
    return RationalPolynomial(std::move(quotient));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) {
      c_.pop_back();
    }
  }

  std::vector<Rational> c_;
};

// Power series truncated after `order` coefficients (x^0 .. x^{order-1}).
// Coeff must form a commutative ring with 0 and 1 constructible from int.
template <typename Coeff>
std::vector<Coeff> series_multiply(const std::vector<Coeff>& a, const std::vector<Coeff>& b,
                                   std::size_t order) {
  std::vector<Coeff> out(order, Coeff(0));
  for (std::size_t i = 0; i < std::min(order, a.size()); ++i) {
    for (std::size_t j = 0; j + i < order && j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

template <typename Coeff>
std::vector<Coeff> series_power(std::vector<Coeff> base, unsigned exponent, std::size_t order) {
  std::vector<Coeff> result(order, Coeff(0));
  if (order == 0) {
    return result;
  }
  result[0] = Coeff(1);
  while (exponent > 0) {
    if (exponent & 1U) {
      result = series_multiply(result, base, order);
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = series_multiply(base, base, order);
    }
  }
  return result;
}

// Multiplicative inverse of a unit series over the rationals, by solving
// a * b = 1 coefficient by coefficient.
inline std::vector<Rational> series_inverse(const std::vector<Rational>& a, std::size_t order) {
  if (a.empty() || a[0] == 0) {
    throw std::domain_error("series is not a unit");
  }
  std::vector<Rational> b(order, Rational(0));
  if (order == 0) {
    return b;
  }
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < order; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) {
      acc += a[i] * b[k - i];
    }
    b[k] = -acc / a[0];
  }
  return b;
}

}  // namespace fpkit
