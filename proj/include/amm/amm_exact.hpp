#pragma once

#include <utility>
#include <vector>

#include "amm/graph.hpp"
#include "amm/poly.hpp"
#include "amm/rat_matrix.hpp"

namespace amm {

struct AmmResult {
  RatMatrix matrix;
  int rank = 0;
  bool simple = false;  // characteristic polynomial squarefree
  int n = 0;
};

/// Exact spectral data of a graph: the squarefree part psi of its
/// characteristic polynomial and, for the symbolic root theta, the integer
/// matrices P_i with  psi(A)/(A - theta) = sum_i theta^i P_i.
/// Then E_theta = (sum_i theta^i P_i) / psi'(theta).
class ExactSpectrum {
 public:
  explicit ExactSpectrum(const Graph& x);
  /// Reuses a characteristic polynomial computed elsewhere.
  ExactSpectrum(const Graph& x, const IntPoly& char_poly);

  int order() const noexcept { return n_; }
  const IntPoly& char_poly() const noexcept { return phi_; }
  const IntPoly& squarefree() const noexcept { return psi_; }
  bool simple() const noexcept { return psi_.degree() == phi_.degree(); }
  /// Coefficients of p_uv(theta) = psi'(theta) E_theta(u, v).
  IntPoly entry_poly(int u, int v) const;

  /// sum over distinct eigenvalues of w(theta) E_theta o E_theta, with
  /// w = weight_num / weight_den (weight_den coprime to psi).
  RatMatrix schur_square_sum(const RatPoly& weight_num, const RatPoly& weight_den) const;

 private:
  void build(const Graph& x);

  int n_ = 0;
  IntPoly phi_;
  IntPoly psi_;
  std::vector<IntMatrix> coeff_mats_;
};

/// Average mixing matrix sum_r E_r o E_r, its rank and the simple flag.
AmmResult average_mixing_exact(const Graph& x);
AmmResult average_mixing_exact(const Graph& x, const IntPoly& char_poly);

/// Row u holds the coefficients of t^0 .. t^{n-1} of phi(X - u, t).
IntMatrix coefficient_matrix(const Graph& x);
RatMatrix to_rational(const IntMatrix& m);

/// Rank of the coefficient matrix; equals rank of the average mixing
/// matrix when the spectrum is simple. Throws DomainError otherwise.
int rank_via_coefficient(const Graph& x);
int rank_via_coefficient(const Graph& x, const IntPoly& char_poly);

/// Unordered pairs u < v whose columns of the exact average mixing matrix coincide.
std::vector<std::pair<int, int>> strongly_cospectral_pairs(const Graph& x);
std::vector<std::pair<int, int>> equal_column_pairs(const RatMatrix& m);

/// Structural checks on an average mixing matrix: symmetric, entrywise
/// nonnegative, every row sums to exactly one.
bool is_doubly_stochastic_symmetric(const RatMatrix& m);

/// Positive semidefiniteness over Q via symmetric Gaussian elimination
/// (an LDL^T whose pivots must all be >= 0, with zero pivots forcing a zero row).
bool is_positive_semidefinite(const RatMatrix& m);

}  // namespace amm
