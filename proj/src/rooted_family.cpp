#include "amm/rooted_family.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "amm/amm_exact.hpp"
#include "amm/charpoly.hpp"
#include "amm/errors.hpp"
#include "amm/graph6.hpp"
#include "amm/tree_chunks.hpp"

namespace amm {

std::vector<double> k2_spectrum_map(const std::vector<double>& eigenvalues) {
  std::vector<double> out;
  out.reserve(2 * eigenvalues.size());
  for (double l : eigenvalues) {
    const double root = std::sqrt(l * l + 4.0);
    out.push_back((l + root) / 2.0);
    out.push_back((l - root) / 2.0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EigenSystem k2_eigenbasis(const EigenSystem& base) {
  const std::size_t n = base.values.size();
  const RealMatrix& z = base.vectors;
  if (z.rows() != n || z.cols() != n) throw DomainError("k2_eigenbasis: eigenvector matrix has the wrong shape");
  double dev = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double g = 0.0;
      for (std::size_t i = 0; i < n; ++i) g += z(i, a) * z(i, b);
      dev = std::max(dev, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  if (dev > 1e-8) throw DomainError("k2_eigenbasis: input basis is not orthonormal");

  struct Pair {
    double mu;
    std::size_t source;
  };
  std::vector<Pair> roots;
  for (std::size_t k = 0; k < n; ++k) {
    const double l = base.values[k];
    const double r = std::sqrt(l * l + 4.0);
    roots.push_back({(l + r) / 2.0, k});
    roots.push_back({(l - r) / 2.0, k});
  }
  std::sort(roots.begin(), roots.end(), [](const Pair& a, const Pair& b) { return a.mu < b.mu; });
  EigenSystem out;
  out.vectors = RealMatrix(2 * n, 2 * n, 0.0);
  for (std::size_t col = 0; col < roots.size(); ++col) {
    const auto [mu, k] = roots[col];
    const double scale = 1.0 / std::sqrt(mu * mu + 1.0);
    out.values.push_back(mu);
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors(i, col) = scale * mu * z(i, k);
      out.vectors(n + i, col) = scale * z(i, k);
    }
  }
  return out;
}

RatMatrix rooted_weight_matrix(const Graph& x) {
  ExactSpectrum s(x);
  return s.schur_square_sum(RatPoly::constant(2), RatPoly{4, 0, 1});
}

RatMatrix amm_rooted_product_exact(const Graph& x) {
  ExactSpectrum s(x);
  if (!s.simple())
    throw DomainError("rooted-product formula needs simple eigenvalues; " + to_text(s.char_poly()) +
                      " has a repeated root");
  const RatMatrix m = s.schur_square_sum(RatPoly::constant(1), RatPoly::constant(1));
  // theta^2 + 4 has no real roots, so it is a unit modulo psi
  const RatMatrix nmat = s.schur_square_sum(RatPoly::constant(2), RatPoly{4, 0, 1});
  const std::size_t n = m.rows();
  RatMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational diag = m(i, j) - nmat(i, j);
      out(i, j) = diag;
      out(n + i, n + j) = diag;
      out(i, n + j) = nmat(i, j);
      out(n + i, j) = nmat(i, j);
    }
  return out;
}

IntPoly t_star_char_poly() {
  const std::vector<IntPoly> factors = {
      {-1, 1},          {1, 1},          {-1, -1, 1},          {-1, 1, 1},
      {1, -2, -1, 1},   {-1, -2, 1, 1},  {-1, 0, 12, 0, -8, 0, 1},
  };
  IntPoly p = IntPoly::constant(1);
  for (const auto& f : factors) p = p * f;
  return p;
}

TStarSearch search_t_star(int threads) {
  constexpr int kOrder = 18;
  constexpr int kHalf = kOrder / 2;
  TStarSearch result;
  std::mutex mu;
  // per-chunk findings, merged in chunk order for a thread-independent report
  std::vector<std::vector<std::pair<std::string, int>>> per_chunk;
  std::vector<std::uint64_t> simple_per_chunk;

  dispatch_tree_chunks(kOrder, 1024, threads, [&](const TreeChunk& chunk) {
    std::vector<std::pair<std::string, int>> found;
    std::uint64_t simple = 0;
    for (const Tree& t : chunk.trees) {
      const IntPoly phi = matching_char_poly(t);
      if (!is_squarefree(phi)) continue;
      ++simple;
      const int rank = rank_via_coefficient(t, phi);
      if (rank < kHalf) found.emplace_back(write_graph6(t), rank);
    }
    std::lock_guard lock(mu);
    if (per_chunk.size() <= chunk.index) {
      per_chunk.resize(chunk.index + 1);
      simple_per_chunk.resize(chunk.index + 1);
    }
    result.trees_scanned += chunk.trees.size();
    per_chunk[chunk.index] = std::move(found);
    simple_per_chunk[chunk.index] = simple;
  });
  for (std::size_t c = 0; c < per_chunk.size(); ++c) {
    result.simple_trees += simple_per_chunk[c];
    for (auto& f : per_chunk[c]) {
      if (f.second == 8) result.rank8.push_back(f.first);
      result.below_half.push_back(std::move(f));
    }
  }
  if (result.rank8.size() == 1) result.tree = Tree(parse_graph6(result.rank8.front()));
  return result;
}

Tree find_t_star(int threads) {
  TStarSearch s = search_t_star(threads);
  if (s.rank8.size() != 1) {
    std::string certs;
    for (const auto& g : s.rank8) certs += (certs.empty() ? "" : " ") + g;
    throw ConsistencyError("expected exactly one simple 18-vertex tree of rank 8, found " +
                               std::to_string(s.rank8.size()),
                           certs);
  }
  const Tree t = *s.tree;
  if (matching_char_poly(t) != t_star_char_poly())
    throw ConsistencyError("rank-8 tree has an unexpected characteristic polynomial " +
                               to_text(matching_char_poly(t)),
                           write_graph6(t));
  return t;
}

std::optional<Tree> load_t_star(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  Tree t(parse_graph6(line));
  if (t.order() != 18 || matching_char_poly(t) != t_star_char_poly())
    throw ConsistencyError("cached tree in " + path + " has the wrong characteristic polynomial", line);
  return t;
}

void save_t_star(const Tree& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << write_graph6(t) << '\n';
}

Tree t_star_cached(const std::string& path, int threads) {
  if (auto t = load_t_star(path)) return *t;
  Tree t = find_t_star(threads);
  save_t_star(t, path);
  return t;
}

std::vector<FamilyMember> build_family(const Tree& base, int iterations, int vertex_cap) {
  if (iterations < 0) throw DomainError("family iterations must be nonnegative");
  long long n = base.order();
  for (int i = 0; i < iterations; ++i) n *= 2;
  if (n > vertex_cap)
    throw DomainError("family member X_" + std::to_string(iterations) + " has " + std::to_string(n) +
                      " vertices, above the cap of " + std::to_string(vertex_cap));
  std::vector<FamilyMember> out;
  Tree cur = base;
  for (int i = 0; i <= iterations; ++i) {
    if (i > 0) cur = rooted_product_k2(cur);
    const IntPoly phi = matching_char_poly(cur);
    const bool simple = is_squarefree(phi);
    if (!simple)
      throw ConsistencyError("family member X_" + std::to_string(i) + " has a repeated eigenvalue",
                             write_graph6(cur));
    const int rank = rank_via_coefficient(cur, phi);
    const int half = (cur.order() + 1) / 2;
    out.push_back(FamilyMember{i, cur, rank, half - rank, simple});
  }
  return out;
}

std::string family_csv(const std::vector<FamilyMember>& family) {
  std::ostringstream out;
  out << "i,n,rank,rank_bound,gap,gap_lower_bound\n";
  for (const auto& m : family)
    out << m.index << ',' << m.order() << ',' << m.rank << ',' << m.rank_bound() << ',' << m.gap << ','
        << m.gap_lower_bound() << '\n';
  return out.str();
}

}  // namespace amm
