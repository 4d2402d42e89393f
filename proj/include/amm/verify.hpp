#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amm/census.hpp"
#include "amm/numeric.hpp"

namespace amm {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// identities, rooted, kernel, float, lowerbound, stars, all.
const std::vector<std::string>& suite_names();

/// Runs a named invariant suite over all trees up to n_max. Throws
/// InputError on an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, int n_max);

// Individual checks. Orders are inclusive; "simple" means squarefree
// characteristic polynomial.

/// Faddeev-LeVerrier, forest recurrence and matching polynomial agree; the
/// squarefree part divides phi and psi / gcd(psi, psi') = psi.
CheckResult check_charpoly_routes(int n_max);
/// Matching polynomial equals characteristic polynomial on random trees.
CheckResult check_matching_identity(int count, int n_max, std::uint64_t seed);
/// Exact M: symmetric, nonnegative, unit row sums, positive semidefinite,
/// trace equal to the root sum of p_uu^2 / psi'^2.
CheckResult check_structural(int n_max);
/// Coefficient-matrix rank equals exact rank on simple trees.
CheckResult check_coefficient_rank(int n_max);
/// rank <= ceil(n/2) on simple trees.
CheckResult check_half_bound(int n_max);
/// Rooted-product block formula equals the direct exact M of X(K2).
CheckResult check_rooted_equivalence(int n_max);
/// Kernel vectors v of M(X) give kernel vectors (v, 0), (0, v) of M(X(K2)).
CheckResult check_kernel_lifting(int n_max);
/// Every weighted projector sum annihilates the kernel of M.
CheckResult check_kernel_weights(int n_max);
/// Float M within tol of exact; numeric rank equals exact rank.
CheckResult check_float_agreement(int n_max, double tol = 1e-9);
/// C V D^-2 V^T C^T residual on simple trees.
CheckResult check_cvdv(int n_max, double tol = 1e-7);
/// Projector invariants of the float decomposition.
CheckResult check_projectors(int n_max);
/// Cesaro average at the horizon within tol of exact M, with the error
/// decreasing over horizon/100, horizon/10, horizon.
CheckResult check_cesaro(int n_max, double horizon = 1e4, double tol = 5e-3);
/// k2 eigenbasis orthonormality and eigen-residuals.
CheckResult check_k2_eigenbasis(int n_max);
/// Certificates for simple trees 4 <= n <= n_max other than P4, rank >= 3.
CheckResult check_lower_bound(int n_min, int n_max);
/// Leaf next to degree two and the perfect / near-perfect matching dichotomy on simple trees.
CheckResult check_matching_structure(int n_max);
/// Census over [n_min, n_max] against the reference tables.
CheckResult check_census_tables(int n_min, int n_max, RankMethod method, int threads);

struct StarRow {
  int leaves = 0;  // K_{1,leaves}
  Rational exact_trace;
  Rational printed_trace;
  int exact_rank = 0;
  int printed_rank = 0;  // the full-rank claim, leaves + 1
  bool printed_matrix_matches = false;
  int printed_matrix_rank = 0;
};

/// Exact trace and rank of M(K_{1,m}) against the printed formulas.
std::vector<StarRow> star_report(int min_leaves, int max_leaves);
std::string star_report_text(const std::vector<StarRow>& rows);

}  // namespace amm
