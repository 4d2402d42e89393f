#pragma once

#include <complex>
#include <string>
#include <vector>

#include "amm/graph.hpp"
#include "amm/matrix.hpp"

namespace amm {

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

struct EigenSystem {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column k belongs to values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops
/// below 1e-14 ||A||_F. Throws DomainError unless ||A - A^T||_inf <= 1e-12.
EigenSystem eigh(const RealMatrix& a);

struct SpectralCluster {
  double eigenvalue;
  RealMatrix projector;
};

struct SpectralDecomp {
  std::vector<SpectralCluster> clusters;
  double cluster_tol = 0.0;
};

/// 1e-8 * max(1, spectral radius).
double default_cluster_tol(const std::vector<double>& eigenvalues);

/// Eigenvalues closer than cluster_tol (chained) share one projector.
/// A negative tolerance selects default_cluster_tol.
SpectralDecomp spectral_decomp(const Graph& x, double cluster_tol = -1.0);

/// U(t) = sum_r exp(i theta_r t) E_r.
ComplexMatrix transition_matrix(const SpectralDecomp& s, double t);
ComplexMatrix transition_matrix(const Graph& x, double t);
/// M(t) = U(t) o conj(U(t)).
RealMatrix mixing_at_time(const SpectralDecomp& s, double t);
RealMatrix mixing_at_time(const Graph& x, double t);

/// Trapezoid approximation of (1/T) int_0^T M(t) dt over `samples` uniform intervals.
RealMatrix cesaro_average(const Graph& x, double horizon, int samples);

/// sum over clusters of E o E.
RealMatrix average_mixing_float(const Graph& x, double cluster_tol = -1.0);

/// Eigenvalues of the symmetric matrix above tol * (largest |eigenvalue|).
int numeric_rank(const RealMatrix& m, double tol = 1e-8);

/// ||C V Delta^-2 V^T C^T - M_float||_inf for a tree (or graph) with simple
/// eigenvalues. Throws DomainError on a repeated eigenvalue.
double verify_cvdv_identity(const Graph& x);

double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

/// Decimal CSV with 17 significant digits.
std::string to_csv(const RealMatrix& m);

}  // namespace amm
