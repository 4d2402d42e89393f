#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amm/amm_float.hpp"
#include "amm/graph.hpp"
#include "amm/poly.hpp"
#include "amm/rat_matrix.hpp"

namespace amm {

/// Each eigenvalue lambda of X becomes the two roots of t^2 - lambda t - 1.
/// Returned sorted ascending.
std::vector<double> k2_spectrum_map(const std::vector<double>& eigenvalues);

/// Orthonormal eigenpairs of X(K2) from those of X: for each root mu of
/// t^2 - lambda t - 1, the vector (mu z, z) / sqrt(mu^2 + 1).
/// Throws DomainError if the input columns deviate from orthonormal by more than 1e-8.
EigenSystem k2_eigenbasis(const EigenSystem& base);

/// N = sum over eigenvalues of X of (2 / (theta^2 + 4)) F o F, exactly.
RatMatrix rooted_weight_matrix(const Graph& x);

/// Average mixing matrix of X(K2) assembled as [[M - N, N], [N, M - N]].
/// Throws DomainError when X has a repeated eigenvalue.
RatMatrix amm_rooted_product_exact(const Graph& x);

/// The 18-vertex characteristic polynomial given as a product of seven
/// integer factors, expanded.
IntPoly t_star_char_poly();

struct TStarSearch {
  std::optional<Tree> tree;             // the unique rank-8 candidate, if unique
  std::vector<std::string> rank8;       // graph6 of every rank-8 simple tree
  std::vector<std::pair<std::string, int>> below_half;  // all simple trees with rank < 9
  std::uint64_t trees_scanned = 0;
  std::uint64_t simple_trees = 0;
};

/// Scans all 18-vertex trees, keeps the simple ones and ranks them through
/// the coefficient matrix. Workers split the canonical enumeration into
/// index ranges.
TStarSearch search_t_star(int threads = 1);

/// Runs search_t_star and validates the result: exactly one rank-8 tree
/// whose characteristic polynomial equals t_star_char_poly(). Throws
/// ConsistencyError otherwise.
Tree find_t_star(int threads = 1);

/// Reads a cached graph6 tree and checks its characteristic polynomial.
/// Returns nullopt if the file is missing; throws ConsistencyError if the
/// cached tree is wrong.
std::optional<Tree> load_t_star(const std::string& path);
void save_t_star(const Tree& t, const std::string& path);
/// Cache first, search (and cache) otherwise.
Tree t_star_cached(const std::string& path, int threads = 1);

struct FamilyMember {
  int index = 0;
  Tree graph;
  int rank = 0;
  int gap = 0;  // ceil(n/2) - rank
  bool simple = false;

  int order() const { return graph.order(); }
  long long rank_bound() const { return 1LL << (index + 3); }
  long long gap_lower_bound() const { return 1LL << index; }
};

/// X_0 = base, X_{i+1} = X_i(K2) for i = 0..iterations, with exact ranks
/// from the coefficient matrix. Throws DomainError when a member would
/// exceed vertex_cap.
std::vector<FamilyMember> build_family(const Tree& base, int iterations, int vertex_cap = 144);

/// CSV with header "i,n,rank,rank_bound,gap,gap_lower_bound".
std::string family_csv(const std::vector<FamilyMember>& family);

}  // namespace amm
