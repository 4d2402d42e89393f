#include "amm/root_sum.hpp"

#include "amm/errors.hpp"

namespace amm {

std::vector<Rational> newton_power_sums(const IntPoly& p, int count) {
  const int d = p.degree();
  if (d < 1) throw DomainError("power sums need a polynomial of degree at least 1");
  // monic coefficients a_0 .. a_{d-1}
  std::vector<Rational> a(d);
  for (int i = 0; i < d; ++i) a[i] = Rational(p[i]) / Rational(p.leading());
  std::vector<Rational> s(count);
  if (count > 0) s[0] = d;
  for (int k = 1; k < count; ++k) {
    Rational acc = 0;
    const int top = std::min(k - 1, d);
    for (int i = 1; i <= top; ++i) acc += a[d - i] * s[k - i];
    if (k <= d) acc += Rational(k) * a[d - k];
    s[k] = -acc;
  }
  return s;
}

RootSum::RootSum(const IntPoly& psi) {
  if (psi.is_zero()) throw DomainError("root sums over the zero polynomial");
  if (!is_squarefree(psi)) throw DomainError("root sums need a squarefree polynomial, got " + to_text(psi));
  IntPoly p = psi.leading() < 0 ? -psi : psi;
  modulus_ = to_rational(p);
  if (p.degree() >= 1) power_sums_ = newton_power_sums(p, p.degree());
}

Rational RootSum::trace(const RatPoly& s) const {
  if (degree() < 1) return 0;
  RatPoly r = mod(s, modulus_);
  Rational acc = 0;
  for (int k = 0; k <= r.degree(); ++k) acc += r.coeffs()[k] * power_sums_[k];
  return acc;
}

Rational RootSum::trace(const RatPoly& num, const RatPoly& den) const {
  if (degree() < 1) return 0;
  RatPoly inv = inverse_mod(den, modulus_);
  return trace(num * inv);
}

std::vector<Rational> RootSum::weighted_power_sums(const RatPoly& w, int count) const {
  std::vector<Rational> h(count);
  if (degree() < 1) return h;
  RatPoly cur = mod(w, modulus_);
  const int d = degree();
  // monic modulus: x^d == -(a_0 + ... + a_{d-1} x^{d-1})
  const Rational& lead = modulus_.leading();
  for (int m = 0; m < count; ++m) {
    Rational acc = 0;
    for (int k = 0; k <= cur.degree(); ++k) acc += cur.coeffs()[k] * power_sums_[k];
    h[m] = acc;
    if (m + 1 == count) break;
    std::vector<Rational> next(d, Rational(0));
    Rational top = cur[d - 1] / lead;
    for (int k = d - 1; k >= 1; --k) next[k] = cur[k - 1] - top * modulus_.coeffs()[k];
    next[0] = -top * modulus_.coeffs()[0];
    cur = RatPoly(std::move(next));
  }
  return h;
}

Rational trace_over_roots(const RatPoly& numerator, const RatPoly& denominator, const IntPoly& psi) {
  RootSum roots(psi);
  return roots.trace(numerator, denominator);
}

}  // namespace amm
