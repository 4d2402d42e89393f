#include "amm/matchings.hpp"

#include "json.hpp"

#include "amm/charpoly.hpp"
#include "amm/errors.hpp"
#include "amm/graph6.hpp"
#include "amm/poly.hpp"

namespace amm {

std::vector<Integer> forest_matching_counts(const Graph& f) {
  if (!f.is_forest()) throw DomainError("matching counts need a forest");
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
  // generating polynomials in x: free[v] (v unmatched), used[v] (v matched)
  std::vector<IntPoly> free_(n), used(n);
  IntPoly total = IntPoly::constant(1);
  const IntPoly x = IntPoly::monomial(1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    IntPoly unmatched = IntPoly::constant(1);
    std::vector<int> kids;
    for (Vertex w : f.neighbors(v))
      if (parent[w] == v) kids.push_back(w);
    std::vector<IntPoly> any(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      any[i] = free_[kids[i]] + used[kids[i]];
      unmatched = unmatched * any[i];
    }
    IntPoly matched;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      IntPoly term = x * free_[kids[i]];
      for (std::size_t j = 0; j < kids.size(); ++j)
        if (j != i) term = term * any[j];
      matched += term;
    }
    free_[v] = std::move(unmatched);
    used[v] = std::move(matched);
    if (parent[v] == -1) total = total * (free_[v] + used[v]);
  }
  std::vector<Integer> m(n / 2 + 1, Integer(0));
  for (int k = 0; k <= total.degree() && k < static_cast<int>(m.size()); ++k) m[k] = total[k];
  return m;
}

std::vector<Integer> matching_counts(const Tree& t) { return forest_matching_counts(t.graph()); }

bool has_perfect_matching(const Graph& f) {
  if (!f.is_forest()) throw DomainError("greedy perfect matching needs a forest");
  const int n = f.order();
  if (n % 2) return false;
  std::vector<int> deg = f.degree_sequence();
  std::vector<char> gone(n, 0);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 0) return false;
    if (deg[v] == 1) leaves.push_back(v);
  }
  int matched = 0;
  while (!leaves.empty()) {
    int leaf = leaves.back();
    leaves.pop_back();
    if (gone[leaf]) continue;
    if (deg[leaf] == 0) return false;
    int partner = -1;
    for (Vertex w : f.neighbors(leaf))
      if (!gone[w]) partner = w;
    gone[leaf] = gone[partner] = 1;
    matched += 2;
    for (Vertex w : f.neighbors(partner)) {
      if (gone[w]) continue;
      if (--deg[w] == 0) return false;
      if (deg[w] == 1) leaves.push_back(w);
    }
  }
  return matched == n;
}

std::optional<Vertex> near_perfect_vertex(const Tree& t) {
  if (t.order() % 2 == 0) return std::nullopt;
  for (int v = 0; v < t.order(); ++v)
    if (has_perfect_matching(t.graph().remove_vertices({v}))) return v;
  return std::nullopt;
}

std::pair<Vertex, Vertex> leaf_next_to_degree_two(const Tree& t) {
  if (t.order() < 3) throw DomainError("leaf next to a degree-two vertex needs at least three vertices");
  for (int u = 0; u < t.order(); ++u)
    if (t.degree(u) == 1) {
      Vertex v = t.neighbors(u).front();
      if (t.degree(v) == 2) return {u, v};
    }
  if (!is_squarefree(matching_char_poly(t)))
    throw DomainError("no leaf next to a degree-two vertex (tree has a repeated eigenvalue)");
  throw ConsistencyError("simple tree without a leaf next to a degree-two vertex", write_graph6(t));
}

std::string to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::C1: return "C1";
    case CertificateCase::C2: return "C2";
    case CertificateCase::C3: return "C3";
  }
  return "?";
}

Integer char_coefficient_from_matchings(const std::vector<Integer>& m, int order, int power) {
  const int gap = order - power;
  if (gap < 0 || gap % 2) return 0;
  const int k = gap / 2;
  if (k >= static_cast<int>(m.size())) return 0;
  return k % 2 ? Integer(-m[k]) : m[k];
}

namespace {

Integer det3(const IntMatrix& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Integer sign_power(int e) { return e % 2 ? Integer(-1) : Integer(1); }

Integer count_at(const std::vector<Integer>& m, int k) {
  return k >= 0 && k < static_cast<int>(m.size()) ? m[k] : Integer(0);
}

bool is_p4(const Tree& t) {
  if (t.order() != 4) return false;
  for (int v = 0; v < 4; ++v)
    if (t.degree(v) > 2) return false;
  return true;
}

}  // namespace

LowerBoundCertificate lower_bound_certificate(const Tree& t) {
  const int n = t.order();
  if (n < 4) throw DomainError("rank lower bound needs at least four vertices");
  if (is_p4(t)) throw DomainError("P4 is the exception: its average mixing matrix has rank 2");
  if (!is_squarefree(matching_char_poly(t))) throw DomainError("rank lower bound needs simple eigenvalues");

  LowerBoundCertificate cert;
  cert.graph6 = write_graph6(t);
  const auto [u, v] = leaf_next_to_degree_two(t);
  const Vertex w = t.neighbors(v)[0] == u ? t.neighbors(v)[1] : t.neighbors(v)[0];
  const Graph& g = t.graph();
  auto deleted_counts = [&](std::vector<Vertex> removed) { return forest_matching_counts(g.remove_vertices(removed)); };

  Vertex third = w;
  if (has_perfect_matching(g)) {
    cert.kind = CertificateCase::C1;
    cert.powers = {1, n - 3, n - 1};
    cert.ell = t.degree(w);
    const int k = n / 2;
    cert.q = count_at(deleted_counts({u, v, w}), k - 2);
    cert.closed_form_det = sign_power(k - 1) * (1 + cert.q * (1 - cert.ell));
    cert.printed_closed_form_det = cert.closed_form_det;
    const bool uv_one = count_at(deleted_counts({u, v}), k - 1) == 1;
    const bool v_one = count_at(deleted_counts({v}), k - 1) == 1;
    const bool ell_q = cert.ell != 2 || cert.q >= 2;
    cert.side_claims_hold = uv_one && v_one && ell_q;
  } else if (has_perfect_matching(g.remove_vertices({u}))) {
    cert.kind = CertificateCase::C2;
    cert.powers = {0, n - 3, n - 1};
    cert.ell = t.degree(w);
    const int j = (n - 1) / 2;
    cert.closed_form_det = sign_power(j + 1) * (cert.ell - 1);
    cert.printed_closed_form_det = sign_power(j) * (cert.ell - 1);
  } else {
    const auto z = near_perfect_vertex(t);
    if (!z) throw ConsistencyError("simple tree without a (near-)perfect matching", cert.graph6);
    third = *z;
    cert.kind = CertificateCase::C3;
    cert.powers = {0, n - 3, n - 1};
    cert.ell = t.degree(third);
    const int j = (n - 1) / 2;
    cert.closed_form_det = sign_power(j + 1);
    cert.printed_closed_form_det = cert.closed_form_det;
  }
  cert.vertices = {u, v, third};
  cert.submatrix = IntMatrix(3, 3);
  for (int r = 0; r < 3; ++r) {
    const auto m = deleted_counts({cert.vertices[r]});
    for (int c = 0; c < 3; ++c) cert.submatrix(r, c) = char_coefficient_from_matchings(m, n - 1, cert.powers[c]);
  }
  cert.det = det3(cert.submatrix);
  if (cert.det == 0) throw ConsistencyError("lower-bound minor is singular", cert.graph6);
  if (cert.det != cert.closed_form_det)
    throw ConsistencyError("lower-bound minor determinant " + cert.det.get_str() + " differs from closed form " +
                               cert.closed_form_det.get_str(),
                           cert.graph6);
  return cert;
}

std::string to_json(const LowerBoundCertificate& c) {
  nlohmann::json sub = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < 3; ++k) row.push_back(c.submatrix(r, k).get_str());
    sub.push_back(row);
  }
  nlohmann::json doc = {
      {"case", to_string(c.kind)},
      {"vertices", c.vertices},
      {"powers", c.powers},
      {"submatrix", sub},
      {"det", c.det.get_str()},
      {"closed_form_det", c.closed_form_det.get_str()},
      {"printed_closed_form_det", c.printed_closed_form_det.get_str()},
      {"ell", c.ell},
      {"graph6", c.graph6},
  };
  if (c.kind == CertificateCase::C1) {
    doc["q"] = c.q.get_str();
    doc["side_claims_hold"] = c.side_claims_hold;
  }
  return doc.dump();
}

}  // namespace amm
