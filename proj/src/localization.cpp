#include "fpkit/localization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fpkit/errors.hpp"
#include "fpkit/power_series.hpp"

namespace fpkit {

namespace {

// sum_i numerators[i] / e[i], accumulated over the common denominator
// lcm(|e_i|) so every intermediate term is an integer.
Rational localize(const std::vector<BigInt>& numerators, const std::vector<BigInt>& e) {
  BigInt common = 1;
  for (const auto& ei : e) {
    common = lcm(common, ei);
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    total += numerators[i] * (common / e[i]);
  }
  return make_rational(total, common);
}

std::vector<BigInt> euler_classes(const std::vector<DerivedPointInvariants>& inv) {
  std::vector<BigInt> e;
  e.reserve(inv.size());
  for (const auto& p : inv) {
    e.push_back(p.e);
  }
  return e;
}

}  // namespace

ChernMonomial::ChernMonomial(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
  if (n_ < 1) {
    throw PreconditionError("Chern monomial dimension must be >= 1");
  }
  int total = 0;
  for (int i : indices_) {
    if (i < 1 || i > n_) {
      throw PreconditionError("Chern class index " + std::to_string(i) + " outside [1, " +
                              std::to_string(n_) + "]");
    }
    total += i;
  }
  if (total != n_) {
    throw PreconditionError("Chern monomial has degree " + std::to_string(total) + ", expected " +
                            std::to_string(n_));
  }
  std::sort(indices_.begin(), indices_.end(), std::greater<>());
}

ChernMonomial ChernMonomial::ci_c1_power(int n, int i) {
  std::vector<int> indices{i};
  indices.insert(indices.end(), static_cast<std::size_t>(std::max(0, n - i)), 1);
  return ChernMonomial(n, std::move(indices));
}

std::string ChernMonomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < indices_.size();) {
    std::size_t run = k;
    while (run < indices_.size() && indices_[run] == indices_[k]) {
      ++run;
    }
    if (!out.empty()) {
      out += "*";
    }
    out += "c" + std::to_string(indices_[k]);
    if (run - k > 1) {
      out += "^" + std::to_string(run - k);
    }
    k = run;
  }
  return out;
}

std::vector<ChernMonomial> all_chern_monomials(int n) {
  std::vector<ChernMonomial> out;
  std::vector<int> parts;
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(n, parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      extend(remaining - p, p);
      parts.pop_back();
    }
  };
  extend(n, n);
  return out;
}

std::vector<BigInt> elementary_symmetric(std::span<const Weight> weights) {
  std::vector<BigInt> sigma(weights.size() + 1, BigInt(0));
  sigma[0] = 1;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    for (std::size_t j = k + 1; j >= 1; --j) {
      sigma[j] += sigma[j - 1] * weights[k];
    }
  }
  return sigma;
}

Rational residue_sum(const FixedPointData& data, unsigned r) {
  const auto inv = derive_invariants(data);
  std::vector<BigInt> numerators;
  numerators.reserve(inv.size());
  for (const auto& p : inv) {
    numerators.push_back(ipow(p.lambda, r));
  }
  return localize(numerators, euler_classes(inv));
}

bool residue_constraints_hold(const FixedPointData& data) {
  for (int r = 0; r < data.n(); ++r) {
    if (residue_sum(data, static_cast<unsigned>(r)) != 0) {
      return false;
    }
  }
  return true;
}

Rational c1_power(const FixedPointData& data) {
  return residue_sum(data, static_cast<unsigned>(data.n()));
}

Rational chern_monomial(const FixedPointData& data, const ChernMonomial& monomial) {
  if (monomial.n() != data.n()) {
    throw PreconditionError("Chern monomial degree " + std::to_string(monomial.n()) +
                            " does not match dimension " + std::to_string(data.n()));
  }
  std::vector<BigInt> numerators;
  std::vector<BigInt> e;
  for (const auto& point : data.points()) {
    const auto sigma = elementary_symmetric(point.weights);
    BigInt term = 1;
    for (int i : monomial.indices()) {
      term *= sigma[static_cast<std::size_t>(i)];
    }
    numerators.push_back(std::move(term));
    e.push_back(sigma.back());
  }
  return localize(numerators, e);
}

Rational line_bundle_power(const FixedPointData& data, const BundleWeights& bundle) {
  check_aligned(data, bundle);
  const auto inv = derive_invariants(data);
  std::vector<BigInt> numerators;
  for (std::size_t i = 0; i < data.size(); ++i) {
    numerators.push_back(ipow(BigInt(bundle[i]), static_cast<unsigned>(data.n())));
  }
  return localize(numerators, euler_classes(inv));
}

LaurentPoly chi_y_from_data(const FixedPointData& data) {
  LaurentPoly chi;
  for (const auto& p : derive_invariants(data)) {
    chi.add_term(p.d, p.d % 2 == 0 ? 1 : -1);
  }
  return chi;
}

LaurentPoly chi_y_hrr_projective(int n) {
  if (n < 1) {
    throw PreconditionError("dimension must be >= 1");
  }
  const std::size_t order = static_cast<std::size_t>(n) + 1;

  // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
  std::vector<Rational> denominator_series(order);
  BigInt factorial = 1;
  for (std::size_t k = 0; k < order; ++k) {
    factorial *= static_cast<unsigned>(k + 1);
    denominator_series[k] = make_rational(k % 2 == 0 ? 1 : -1, factorial);
  }
  // A(x) = x / (1 - e^{-x}); also A(x) e^{-x} = A(-x).
  const auto todd = series_inverse(denominator_series, order);

  // Q(x) = x (1 + y e^{-x}) / (1 - e^{-x}) = A(x) + y A(-x), coefficients in Q[y].
  std::vector<RationalPolynomial> q(order);
  for (std::size_t k = 0; k < order; ++k) {
    const Rational sign = k % 2 == 0 ? 1 : -1;
    q[k] = RationalPolynomial({todd[k], sign * todd[k]});
  }

  // The tangent bundle plus a trivial line is (n+1) copies of the hyperplane
  // bundle, so prod over the n Chern roots is Q(x)^{n+1} / Q(0) with Q(0) = 1 + y.
  const auto power = series_power(q, static_cast<unsigned>(n + 1), order);
  const RationalPolynomial top = power[static_cast<std::size_t>(n)].divided_by_linear(-1);

  LaurentPoly chi;
  for (std::size_t p = 0; p < top.coefficients().size(); ++p) {
    const Rational& c = top.coefficients()[p];
    if (!is_integer(c)) {
      throw InconsistentDataError("non-integral chi_y coefficient " + to_string(c));
    }
    chi.add_term(static_cast<int>(p), numerator_of(c));
  }
  return chi;
}

KCoefficients k_coefficients(const LaurentPoly& chi, int n) {
  if (n < 0) {
    throw PreconditionError("dimension must be >= 0");
  }
  if (!chi.is_polynomial()) {
    throw PreconditionError("chi_y has negative powers of y: " + chi.to_string());
  }
  if (chi.degree() > n) {
    throw PreconditionError("chi_y degree " + std::to_string(chi.degree()) + " exceeds n = " +
                            std::to_string(n));
  }
  // y^p = (u - 1)^p = sum_j C(p, j) u^j (-1)^{p-j}
  KCoefficients k;
  k.values.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& [p, c] : chi.terms()) {
    for (int j = 0; j <= p; ++j) {
      BigInt term = c * binomial(static_cast<unsigned>(p), static_cast<unsigned>(j));
      if ((p - j) % 2 != 0) {
        term = -term;
      }
      k.values[static_cast<std::size_t>(j)] += Rational(term);
    }
  }
  return k;
}

Rational c1cn1_from_k2(const Rational& k2, const BigInt& euler, int n) {
  const BigInt coefficient = BigInt(n) * (3 * n - 5);
  Rational value = 12 * k2 - make_rational(coefficient, 2) * Rational(euler);
  if (!is_integer(value)) {
    throw InconsistentDataError("c1*c_{n-1} evaluates to the non-integer " + to_string(value));
  }
  return value;
}

}  // namespace fpkit
