#pragma once

// Exact real-rootedness of integer polynomials via square-free reduction and
// Sturm sequences. Nothing here touches floating point.

#include <vector>

#include "raypf/bigint.hpp"
#include "raypf/exact_core.hpp"

namespace raypf {

/// Dense integer polynomial, coefficients indexed by degree. Trailing zeros
/// are stripped, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(int i) const;

  BigInt operator()(const BigInt& x) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p);

IntPolynomial derivative(const IntPolynomial& p);

/// gcd of the coefficients, always >= 0.
BigInt content(const IntPolynomial& p);

/// p / content(p); the sign of the leading coefficient is kept.
IntPolynomial primitive_part(const IntPolynomial& p);

/// R = lc(B)^e * A - Q * B with deg R < deg B, where e is the number of
/// reduction steps taken. `scale_sign` receives sign(lc(B)^e).
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b,
                               int* scale_sign = nullptr);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

/// p / d where d divides p over the integers; throws std::domain_error
/// otherwise.
IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d);

/// p / gcd(p, p').
IntPolynomial square_free_part(const IntPolynomial& p);

/// Polynomial of the finite PF-regime sequence, truncated after last_nonzero.
/// Throws std::invalid_argument for Transition-regime sequences or when the
/// values do not cover the whole support.
IntPolynomial from_sequence(const RaySequence& seq);

/// p_0 = p, p_1 = p', p_{i+1} = -rem(p_{i-1}, p_i) scaled to its primitive
/// part by a positive factor. Stops at the last nonzero remainder.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Sign changes of the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<IntPolynomial>& chain, const BigInt& x);

/// 1 + ceil(max_{i<deg} |c_i| / |c_deg|); every root satisfies |z| < bound.
BigInt cauchy_bound(const IntPolynomial& p);

/// Distinct real roots of p in (-B, B], B the Cauchy bound.
int count_distinct_real_roots(const IntPolynomial& p);

/// True iff every complex root of p is real. Throws for the zero polynomial.
bool all_roots_real(const IntPolynomial& p);

}  // namespace raypf
