#pragma once

#include <vector>

#include "amm/poly.hpp"

namespace amm {

/// Exact sums over the (distinct) roots of a squarefree integer polynomial.
/// Holds the root power sums p_0 .. p_{d-1}; everything else is reduced
/// modulo the polynomial first.
class RootSum {
 public:
  /// Throws DomainError if `psi` is zero or not squarefree.
  explicit RootSum(const IntPoly& psi);

  int degree() const noexcept { return modulus_.degree(); }
  const RatPoly& modulus() const noexcept { return modulus_; }
  /// p_k = sum of theta^k over the roots, 0 <= k < d.
  const std::vector<Rational>& power_sums() const noexcept { return power_sums_; }

  /// Sum over the roots of s(theta).
  Rational trace(const RatPoly& s) const;

  /// Sum over the roots of num(theta) / den(theta). Throws DomainError if
  /// den shares a root with the modulus.
  Rational trace(const RatPoly& num, const RatPoly& den) const;

  /// h_m = sum over the roots of theta^m w(theta), m = 0 .. count-1, for the
  /// residue w (already reduced or not).
  std::vector<Rational> weighted_power_sums(const RatPoly& w, int count) const;

 private:
  RatPoly modulus_;
  std::vector<Rational> power_sums_;
};

/// Sum of numerator(theta) / denominator(theta) over the roots of psi.
Rational trace_over_roots(const RatPoly& numerator, const RatPoly& denominator, const IntPoly& psi);

/// Newton power sums p_0 .. p_{count-1} of the roots of p (any degree >= 1).
std::vector<Rational> newton_power_sums(const IntPoly& p, int count);

}  // namespace amm
