#include "amm/amm_float.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "amm/amm_exact.hpp"
#include "amm/charpoly.hpp"
#include "amm/errors.hpp"

namespace amm {

EigenSystem eigh(const RealMatrix& input) {
  if (!input.square()) throw DomainError("eigh: matrix is not square");
  const std::size_t n = input.rows();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) asym = std::max(asym, std::abs(input(i, j) - input(j, i)));
  if (asym > 1e-12) throw DomainError("eigh: matrix is not symmetric");

  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n);
  double norm = 0.0;
  for (double x : a.data()) norm += x * x;
  norm = std::sqrt(norm);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= 1e-14 * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  EigenSystem out;
  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(idx[k], idx[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[k]);
  }
  return out;
}

double default_cluster_tol(const std::vector<double>& eigenvalues) {
  double radius = 0.0;
  for (double x : eigenvalues) radius = std::max(radius, std::abs(x));
  return 1e-8 * std::max(1.0, radius);
}

SpectralDecomp spectral_decomp(const Graph& x, double cluster_tol) {
  const auto es = eigh(x.adjacency<double>());
  const std::size_t n = es.values.size();
  SpectralDecomp out;
  out.cluster_tol = cluster_tol < 0 ? default_cluster_tol(es.values) : cluster_tol;
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = k + 1;
    while (end < n && es.values[end] - es.values[end - 1] <= out.cluster_tol) ++end;
    SpectralCluster c{0.0, RealMatrix(n, n, 0.0)};
    for (std::size_t m = k; m < end; ++m) {
      c.eigenvalue += es.values[m];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.projector(i, j) += es.vectors(i, m) * es.vectors(j, m);
    }
    c.eigenvalue /= static_cast<double>(end - k);
    out.clusters.push_back(std::move(c));
    k = end;
  }
  return out;
}

ComplexMatrix transition_matrix(const SpectralDecomp& s, double t) {
  const std::size_t n = s.clusters.empty() ? 0 : s.clusters.front().projector.rows();
  ComplexMatrix u(n, n, {0.0, 0.0});
  for (const auto& c : s.clusters) {
    const std::complex<double> phase = std::polar(1.0, c.eigenvalue * t);
    for (std::size_t i = 0; i < n * n; ++i) u.data()[i] += phase * c.projector.data()[i];
  }
  return u;
}

ComplexMatrix transition_matrix(const Graph& x, double t) { return transition_matrix(spectral_decomp(x), t); }

RealMatrix mixing_at_time(const SpectralDecomp& s, double t) {
  const ComplexMatrix u = transition_matrix(s, t);
  RealMatrix m(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.data().size(); ++i) m.data()[i] = std::norm(u.data()[i]);
  return m;
}

RealMatrix mixing_at_time(const Graph& x, double t) { return mixing_at_time(spectral_decomp(x), t); }

RealMatrix cesaro_average(const Graph& x, double horizon, int samples) {
  if (horizon <= 0.0) throw DomainError("Cesaro horizon must be positive");
  if (samples < 1) throw DomainError("Cesaro average needs at least one interval");
  const SpectralDecomp s = spectral_decomp(x);
  const std::size_t n = x.order();
  RealMatrix acc(n, n, 0.0);
  const double h = horizon / samples;
  for (int k = 0; k <= samples; ++k) {
    const double w = (k == 0 || k == samples) ? 0.5 : 1.0;
    const RealMatrix m = mixing_at_time(s, k * h);
    for (std::size_t i = 0; i < n * n; ++i) acc.data()[i] += w * m.data()[i];
  }
  for (auto& v : acc.data()) v /= samples;
  return acc;
}

RealMatrix average_mixing_float(const Graph& x, double cluster_tol) {
  const SpectralDecomp s = spectral_decomp(x, cluster_tol);
  const std::size_t n = x.order();
  RealMatrix m(n, n, 0.0);
  for (const auto& c : s.clusters)
    for (std::size_t i = 0; i < n * n; ++i) m.data()[i] += c.projector.data()[i] * c.projector.data()[i];
  return m;
}

int numeric_rank(const RealMatrix& m, double tol) {
  if (m.rows() == 0) return 0;
  const auto es = eigh(m);
  double top = 0.0;
  for (double v : es.values) top = std::max(top, std::abs(v));
  if (top == 0.0) return 0;
  return static_cast<int>(std::count_if(es.values.begin(), es.values.end(), [&](double v) { return v > tol * top; }));
}

double verify_cvdv_identity(const Graph& x) {
  const IntPoly phi = char_poly_fast(x);
  if (!is_squarefree(phi)) throw DomainError("Vandermonde identity needs simple eigenvalues");
  const int n = x.order();
  const auto es = eigh(x.adjacency<double>());
  const IntPoly dphi = phi.derivative();
  RealMatrix cv(n, n, 0.0);
  if (n == 1) {
    cv(0, 0) = 1.0;  // phi(empty graph) = 1
  } else {
    const IntMatrix c = coefficient_matrix(x);
    for (int u = 0; u < n; ++u)
      for (int r = 0; r < n; ++r) {
        double pw = 1.0, sum = 0.0;
        for (int i = 0; i < n; ++i) {
          sum += c(u, i).get_d() * pw;
          pw *= es.values[r];
        }
        cv(u, r) = sum;
      }
  }
  std::vector<double> delta(n);
  for (int r = 0; r < n; ++r) delta[r] = dphi.evaluate(es.values[r]);
  RealMatrix lhs(n, n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      double s = 0.0;
      for (int r = 0; r < n; ++r) s += cv(u, r) * cv(v, r) / (delta[r] * delta[r]);
      lhs(u, v) = s;
    }
  return max_abs_diff(lhs, average_mixing_float(x));
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

std::string to_csv(const RealMatrix& m) {
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace amm
