#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arrtop/numeric.hpp"

namespace arrtop {

/// Coefficients of the r-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int r);

/// An exact element of Z[x]/Phi_r(x), stored by its canonical remainder
/// (coefficients of 1, x, ..., x^{phi(r)-1}).
struct CycloPoly {
  int order = 1;
  std::vector<std::int64_t> coeffs;

  bool is_zero() const;
  std::string to_string() const;

  /// The image of sum_k counts[k] x^k (an element of Z[Z_r]) in Z[x]/Phi_r.
  static CycloPoly from_group_ring(int r, std::span<const std::int64_t> counts);
  /// zeta_r^k.
  static CycloPoly zeta_power(int r, std::int64_t k);

  bool operator==(const CycloPoly&) const = default;
};

/// The cyclotomic field Q(zeta_r) = Q[x]/Phi_r(x).
class CyclotomicField {
 public:
  using Element = std::vector<Rational>;  ///< length degree()

  explicit CyclotomicField(int r);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }

  Element zero() const { return Element(static_cast<std::size_t>(degree()), 0); }
  Element one() const;
  Element embed(const CycloPoly& p) const;

  static bool is_zero(const Element& a);
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  /// Inverse via the extended Euclidean algorithm against Phi_r. Throws
  /// ConsistencyError on a zero divisor (impossible since Phi_r is irreducible).
  Element inverse(const Element& a) const;

 private:
  Element reduce(std::vector<Rational> poly) const;

  int order_;
  std::vector<Rational> modulus_;  ///< monic Phi_r, lowest degree first
};

/// A product of cyclotomic polynomials, prod_r Phi_r(t)^{e_r}. The factor
/// r = 1 is (t - 1).
struct CharPolyFactorization {
  std::map<int, int> exponents;  ///< r -> e_r, only positive exponents stored

  /// Multiplies by Phi_r^e (e >= 0).
  void multiply_cyclotomic(int r, int e);
  /// Multiplies by (t^g - 1)^e = prod_{d | g} Phi_d^e.
  void multiply_t_power_minus_one(int g, int e);

  int exponent(int r) const;
  int degree() const;
  /// Integer coefficients of the expanded polynomial, lowest degree first.
  std::vector<Integer> expand() const;
  /// Human-readable form such as "(t-1)^5 (t^2+t+1)".
  std::string to_string() const;

  bool operator==(const CharPolyFactorization&) const = default;
};

/// Exact rank over Q(zeta_r) of a matrix with entries in Z[x]/Phi_r.
std::size_t rank_over_cyclotomic(const std::vector<std::vector<CycloPoly>>& m, int r);

}  // namespace arrtop
