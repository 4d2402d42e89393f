#include "amm/poly.hpp"

#include <sstream>

#include "amm/errors.hpp"

namespace amm {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) throw DomainError("polynomial coefficient " + x.get_str() + " is not an integer");
    c.emplace_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quotient, RatPoly& remainder) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const Rational& lb = b.leading();
  std::vector<Rational> q(a.degree() >= db ? a.degree() - db + 1 : 0);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / lb;
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
  }
  quotient = RatPoly(std::move(q));
  if (static_cast<int>(r.size()) > db) r.resize(db < 0 ? 0 : db);
  remainder = RatPoly(std::move(r));
}

RatPoly mod(const RatPoly& a, const RatPoly& m) {
  if (a.degree() < m.degree()) return a;
  RatPoly q, r;
  divmod(a, m, q, r);
  return r;
}

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  // invariant: s * a == r (mod m)
  RatPoly r0 = m, r1 = mod(a, m);
  RatPoly s0, s1 = RatPoly::constant(1);
  while (!r1.is_zero() && r1.degree() > 0) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw DomainError("polynomial is not invertible modulo " + to_text(m) + ": common factor");
  Rational inv = 1 / r1.leading();
  return mod(s1 * inv, m);
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c = p.coeffs();
  if (g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int dr = a.degree();
  while (dr >= db) {
    Integer lr = r[dr];
    for (int i = 0; i <= dr; ++i) r[i] *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeffs()[i];
    r.pop_back();
    --dr;
    while (dr >= 0 && r[dr] == 0) {
      r.pop_back();
      --dr;
    }
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly::constant(1);
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  RatPoly q, r;
  divmod(to_rational(a), to_rational(b), q, r);
  if (!r.is_zero()) throw DomainError("exact_divide: " + to_text(b) + " does not divide " + to_text(a));
  return to_integer(q);
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  IntPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return primitive_part(p);
  return primitive_part(exact_divide(p, g));
}

bool is_squarefree(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree test of the zero polynomial");
  // x^2 | p is common for trees and needs no gcd.
  if (p.degree() >= 2 && p[0] == 0 && p[1] == 0) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

template <typename T>
std::string ascending_text(const Polynomial<T>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& c : p.coeffs()) {
    if (!s.empty()) s += ' ';
    s += c.get_str();
  }
  return s;
}

}  // namespace

std::string to_text(const IntPoly& p) { return ascending_text(p); }
std::string to_text(const RatPoly& p) { return ascending_text(p); }

IntPoly parse_int_poly(const std::string& text) {
  std::istringstream in(text);
  std::vector<Integer> c;
  std::string tok;
  while (in >> tok) {
    Integer v;
    if (v.set_str(tok, 10) != 0) throw InputError("bad polynomial coefficient '" + tok + "'");
    c.push_back(v);
  }
  return IntPoly(std::move(c));
}

std::string pretty(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    Integer c = p[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Integer mag = neg ? Integer(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != 1 || k == 0) s += mag.get_str() + (k > 0 ? "*" : "");
    if (k > 0) s += std::string(1, var) + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

}  // namespace amm
