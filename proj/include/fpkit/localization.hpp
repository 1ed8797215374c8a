#pragma once

#include <vector>

#include "fpkit/fixed_point_data.hpp"
#include "fpkit/laurent_poly.hpp"
#include "fpkit/rational.hpp"

namespace fpkit {

// A Chern monomial c_{i_1} ... c_{i_k} of total degree n. Indices are kept
// in descending order so that equal monomials compare equal.
class ChernMonomial {
 public:
  // Throws PreconditionError unless every index lies in [1, n] and the
  // indices sum to n.
  ChernMonomial(int n, std::vector<int> indices);

  int n() const { return n_; }
  const std::vector<int>& indices() const { return indices_; }

  // c_i c_1^{n-i}
  static ChernMonomial ci_c1_power(int n, int i);
  // c_1^n
  static ChernMonomial c1_power(int n) { return ci_c1_power(n, 1); }

  // e.g. "c2*c1^2"
  std::string to_string() const;

  friend bool operator==(const ChernMonomial&, const ChernMonomial&) = default;

 private:
  int n_;
  std::vector<int> indices_;
};

// All degree-n monomials (partitions of n), in reverse lexicographic order.
std::vector<ChernMonomial> all_chern_monomials(int n);

// K_0, ..., K_n with chi_y = sum_j K_j (y + 1)^j.
struct KCoefficients {
  std::vector<Rational> values;

  Rational operator[](std::size_t j) const { return j < values.size() ? values[j] : Rational(0); }
};

// sum_i lambda_i^r / e_i.
Rational residue_sum(const FixedPointData& data, unsigned r);

// Residue sums vanish for every 0 <= r <= n-1.
bool residue_constraints_hold(const FixedPointData& data);

// residue_sum(data, n): the Chern number c_1^n for consistent data.
Rational c1_power(const FixedPointData& data);

// sum_i prod_t sigma_{i_t}(weights at P_i) / e_i, with sigma_j the j-th
// elementary symmetric polynomial. No realizability check is made.
Rational chern_monomial(const FixedPointData& data, const ChernMonomial& monomial);

// sum_i a_i^n / e_i under the caller's normalization of the bundle weights.
// This is not shift invariant for arbitrary formal data.
Rational line_bundle_power(const FixedPointData& data, const BundleWeights& bundle);

// sum_i (-y)^{d_i}
LaurentPoly chi_y_from_data(const FixedPointData& data);

// chi_y of a manifold whose total Chern class is (1+x)^{n+1} with
// x^n[M] = 1, evaluated from the Riemann-Roch integrand
// prod_i x_i (1 + y e^{-x_i}) / (1 - e^{-x_i}) by exact truncated series.
LaurentPoly chi_y_hrr_projective(int n);

// Re-expands chi in powers of (y + 1). Throws PreconditionError if chi is
// not a polynomial of degree <= n.
KCoefficients k_coefficients(const LaurentPoly& chi, int n);

// 12 K_2 - n(3n-5)/2 * euler, the Chern number c_1 c_{n-1}.
// Throws InconsistentDataError when the result is not an integer.
Rational c1cn1_from_k2(const Rational& k2, const BigInt& euler, int n);

// Elementary symmetric polynomials sigma_0..sigma_n of the weights.
std::vector<BigInt> elementary_symmetric(std::span<const Weight> weights);

}  // namespace fpkit
