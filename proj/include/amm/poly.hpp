#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "amm/numeric.hpp"

namespace amm {

/// Dense univariate polynomial, coefficient i multiplies x^i. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Polynomial constant(const T& a) { return Polynomial(std::vector<T>{a}); }
  static Polynomial monomial(int degree, const T& a = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = a;
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i; zero past the degree.
  T operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  template <typename U>
  U evaluate(const U& x) const {
    U acc = U(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + coerce<U>(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Multiply by x^k.
  Polynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(const IntPoly& p);
/// Throws DomainError if a coefficient is not an integer.
IntPoly to_integer(const RatPoly& p);

/// Quotient and remainder over the rationals. Throws DomainError on a zero divisor.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quotient, RatPoly& remainder);
RatPoly mod(const RatPoly& a, const RatPoly& m);

/// Inverse of a modulo m (extended Euclid over Q). Throws DomainError when
/// gcd(a, m) is not constant.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);

Integer content(const IntPoly& p);
/// p / content(p), normalised to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Pseudo-remainder lc(b)^k * a mod b for the number k of elimination steps;
/// stays in Z[x].
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient, via the primitive
/// pseudo-remainder sequence. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b; throws DomainError if b does not divide a over Q
/// or the quotient is not integral.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p') as a primitive polynomial with positive leading
/// coefficient. Throws DomainError on the zero polynomial.
IntPoly squarefree_part(const IntPoly& p);
bool is_squarefree(const IntPoly& p);

/// "c0 c1 ... cd", ascending; the zero polynomial prints as "0".
std::string to_text(const IntPoly& p);
std::string to_text(const RatPoly& p);
IntPoly parse_int_poly(const std::string& text);
/// Human-readable form, highest degree first, e.g. "t^4 - 3*t^2 + 1".
std::string pretty(const IntPoly& p, char var = 't');

}  // namespace amm
