#include "fpkit/laurent_poly.hpp"

namespace fpkit {

LaurentPoly LaurentPoly::constant(const BigInt& value) { return monomial(0, value); }

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

int LaurentPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

int LaurentPoly::low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Rational LaurentPoly::evaluate(const Rational& point) const {
  Rational total = 0;
  for (const auto& [exponent, coefficient] : terms_) {
    if (exponent >= 0) {
      total += Rational(coefficient) * rpow(point, static_cast<unsigned>(exponent));
    } else {
      total += Rational(coefficient) / rpow(point, static_cast<unsigned>(-exponent));
    }
  }
  return total;
}

LaurentPoly LaurentPoly::reflected(int shift) const {
  LaurentPoly out;
  for (const auto& [exponent, coefficient] : terms_) {
    out.add_term(shift - exponent, coefficient);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [exponent, coefficient] : other.terms_) {
    add_term(exponent, coefficient);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [exponent, coefficient] : other.terms_) {
    add_term(exponent, -coefficient);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      product.add_term(ea + eb, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

std::string LaurentPoly::to_string(std::string_view variable) const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [exponent, coefficient] : terms_) {
    const bool negative = coefficient < 0;
    BigInt magnitude = negative ? BigInt(-coefficient) : coefficient;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (exponent == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) {
      out += magnitude.str() + "*";
    }
    out += variable;
    if (exponent != 1) {
      out += "^" + std::to_string(exponent);
    }
  }
  return out;
}

}  // namespace fpkit
