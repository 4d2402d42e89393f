#include "amm/charpoly.hpp"

#include "amm/errors.hpp"

namespace amm {

IntPoly char_poly(const Graph& x) {
  const int n = x.order();
  const Matrix<Integer> a = x.adjacency<Integer>();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  Matrix<Integer> m(n, n, Integer(0));
  for (int k = 1; k <= n; ++k) {
    Matrix<Integer> next = a * m;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Integer tr = 0;
    for (int i = 0; i < n; ++i)
      for (Vertex j : x.neighbors(i)) tr += m(j, i);
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
      throw ConsistencyError("Faddeev-LeVerrier produced a non-integral coefficient");
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

namespace {

// For the subtree hanging at v: whole = phi(subtree), without_root = phi(subtree - v).
struct RootedPolys {
  IntPoly whole;
  IntPoly without_root;
};

}  // namespace

IntPoly forest_char_poly(const Graph& f) {
  if (!f.is_forest()) throw DomainError("characteristic polynomial recurrence needs a forest");
  const int n = f.order();
  std::vector<int> parent(n, -2), order;
  order.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex w : f.neighbors(v))
        if (parent[w] == -2) {
          parent[w] = v;
          stack.push_back(w);
        }
    }
  }
  const IntPoly t = IntPoly::monomial(1);
  std::vector<RootedPolys> dp(n);
  IntPoly total = IntPoly::constant(1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<int> kids;
    for (Vertex w : f.neighbors(v))
      if (parent[w] == v) kids.push_back(w);
    // prefix/suffix products of the children's whole polynomials
    const std::size_t k = kids.size();
    std::vector<IntPoly> prefix(k + 1, IntPoly::constant(1)), suffix(k + 1, IntPoly::constant(1));
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * dp[kids[i]].whole;
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * dp[kids[i]].whole;
    IntPoly whole = t * prefix[k];
    for (std::size_t i = 0; i < k; ++i) whole -= prefix[i] * dp[kids[i]].without_root * suffix[i + 1];
    dp[v] = {std::move(whole), std::move(prefix[k])};
    if (parent[v] == -1) total = total * dp[v].whole;
    for (int w : kids) dp[w] = {};
  }
  return total;
}

IntPoly matching_char_poly(const Tree& t) { return forest_char_poly(t.graph()); }

std::vector<IntPoly> vertex_deleted_polys(const Graph& x) {
  if (x.order() < 2) throw DomainError("vertex-deleted polynomials need at least two vertices");
  const bool forest = x.is_forest();
  std::vector<IntPoly> out;
  out.reserve(x.order());
  for (int u = 0; u < x.order(); ++u) {
    Graph sub = x.remove_vertices({u});
    out.push_back(forest ? forest_char_poly(sub) : char_poly(sub));
  }
  return out;
}

}  // namespace amm

namespace amm {

IntPoly char_poly_fast(const Graph& x) { return x.is_forest() ? forest_char_poly(x) : char_poly(x); }

}  // namespace amm
