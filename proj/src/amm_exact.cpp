#include "amm/amm_exact.hpp"

#include "amm/charpoly.hpp"
#include "amm/errors.hpp"
#include "amm/root_sum.hpp"

namespace amm {

ExactSpectrum::ExactSpectrum(const Graph& x) : n_(x.order()), phi_(char_poly_fast(x)) { build(x); }

ExactSpectrum::ExactSpectrum(const Graph& x, const IntPoly& char_poly) : n_(x.order()), phi_(char_poly) {
  if (phi_.degree() != n_ || phi_.leading() != 1)
    throw DomainError("characteristic polynomial must be monic of degree n");
  build(x);
}

void ExactSpectrum::build(const Graph& x) {
  psi_ = squarefree_part(phi_);
  const int d = psi_.degree();
  // Horner in the matrix: P_{d-1} = psi_d I,  P_{i-1} = A P_i + psi_i I
  coeff_mats_.assign(d, IntMatrix());
  IntMatrix cur(n_, n_, Integer(0));
  for (int i = 0; i < n_; ++i) cur(i, i) = psi_[d];
  coeff_mats_[d - 1] = cur;
  for (int i = d - 1; i >= 1; --i) {
    IntMatrix next(n_, n_, Integer(0));
    for (int u = 0; u < n_; ++u)
      for (Vertex w : x.neighbors(u))
        for (int v = 0; v < n_; ++v) next(u, v) += cur(w, v);
    for (int u = 0; u < n_; ++u) next(u, u) += psi_[i];
    cur = std::move(next);
    coeff_mats_[i - 1] = cur;
  }
}

IntPoly ExactSpectrum::entry_poly(int u, int v) const {
  std::vector<Integer> c(coeff_mats_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff_mats_[i](u, v);
  return IntPoly(std::move(c));
}

RatMatrix ExactSpectrum::schur_square_sum(const RatPoly& weight_num, const RatPoly& weight_den) const {
  const int d = psi_.degree();
  RootSum roots(psi_);
  const RatPoly dpsi = to_rational(psi_.derivative());
  // W = w / psi'^2 as a residue mod psi, computed once per graph
  const RatPoly residue = mod(weight_num * inverse_mod(weight_den * dpsi * dpsi, roots.modulus()), roots.modulus());
  const std::vector<Rational> h = roots.weighted_power_sums(residue, 2 * d - 1);
  // common denominator so the per-entry quadratic form stays in Z
  Integer den = 1;
  for (const auto& x : h) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> hz(h.size());
  for (std::size_t m = 0; m < h.size(); ++m) hz[m] = h[m].get_num() * (den / h[m].get_den());

  RatMatrix out(n_, n_);
  std::vector<Integer> p(d), sq(2 * d - 1);
  Integer acc;
  for (int u = 0; u < n_; ++u)
    for (int v = u; v < n_; ++v) {
      for (int i = 0; i < d; ++i) p[i] = coeff_mats_[i](u, v);
      for (auto& s : sq) s = 0;
      for (int i = 0; i < d; ++i) {
        if (p[i] == 0) continue;
        for (int j = 0; j < d; ++j) mpz_addmul(sq[i + j].get_mpz_t(), p[i].get_mpz_t(), p[j].get_mpz_t());
      }
      acc = 0;
      for (int m = 0; m < 2 * d - 1; ++m) mpz_addmul(acc.get_mpz_t(), sq[m].get_mpz_t(), hz[m].get_mpz_t());
      Rational q(acc, den);
      q.canonicalize();
      out(u, v) = q;
      out(v, u) = q;
    }
  return out;
}

AmmResult average_mixing_exact(const Graph& x) {
  ExactSpectrum s(x);
  AmmResult r;
  r.matrix = s.schur_square_sum(RatPoly::constant(1), RatPoly::constant(1));
  r.rank = exact_rank(r.matrix);
  r.simple = s.simple();
  r.n = x.order();
  return r;
}

AmmResult average_mixing_exact(const Graph& x, const IntPoly& char_poly) {
  ExactSpectrum s(x, char_poly);
  AmmResult r;
  r.matrix = s.schur_square_sum(RatPoly::constant(1), RatPoly::constant(1));
  r.rank = exact_rank(r.matrix);
  r.simple = s.simple();
  r.n = x.order();
  return r;
}

IntMatrix coefficient_matrix(const Graph& x) {
  const auto polys = vertex_deleted_polys(x);
  const int n = x.order();
  IntMatrix c(n, n, Integer(0));
  for (int u = 0; u < n; ++u)
    for (int r = 0; r < n; ++r) c(u, r) = polys[u][r];
  return c;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

int rank_via_coefficient(const Graph& x, const IntPoly& char_poly) {
  if (!is_squarefree(char_poly))
    throw DomainError("coefficient-matrix rank needs simple eigenvalues; characteristic polynomial " +
                      to_text(char_poly) + " has a repeated root");
  if (x.order() == 1) return 1;
  return bareiss_rank(coefficient_matrix(x));
}

int rank_via_coefficient(const Graph& x) { return rank_via_coefficient(x, char_poly_fast(x)); }

std::vector<std::pair<int, int>> equal_column_pairs(const RatMatrix& m) {
  std::vector<std::pair<int, int>> out;
  const auto n = static_cast<int>(m.cols());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool same = true;
      for (std::size_t i = 0; i < m.rows() && same; ++i) same = m(i, u) == m(i, v);
      if (same) out.emplace_back(u, v);
    }
  return out;
}

std::vector<std::pair<int, int>> strongly_cospectral_pairs(const Graph& x) {
  return equal_column_pairs(average_mixing_exact(x).matrix);
}

bool is_doubly_stochastic_symmetric(const RatMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational sum = 0;
    for (const auto& x : m.row(i)) {
      if (x < 0) return false;
      sum += x;
    }
    if (sum != 1) return false;
  }
  return true;
}

bool is_positive_semidefinite(const RatMatrix& m) {
  if (!is_symmetric(m)) return false;
  RatMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) < 0) return false;
    if (a(k, k) == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (a(k, j) != 0) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace amm
