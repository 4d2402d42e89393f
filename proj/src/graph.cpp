#include "amm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "amm/errors.hpp"
#include "amm/graph6.hpp"

namespace amm {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n = " +
                       std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InputError("duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool Graph::is_forest() const {
  // union-find cycle check
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : edges_) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Graph Graph::remove_vertices(const std::vector<Vertex>& removed) const {
  std::vector<int> index(n_, 0);
  for (Vertex r : removed) index[r] = -1;
  int next = 0;
  for (int v = 0; v < n_; ++v)
    if (index[v] != -1) index[v] = next++;
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (auto [u, v] : edges_)
    if (index[u] >= 0 && index[v] >= 0) kept.emplace_back(index[u], index[v]);
  return Graph(next, std::move(kept));
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

Tree::Tree(Graph g) : g_(std::move(g)) {
  if (!g_.is_tree()) throw DomainError("graph on " + std::to_string(g_.order()) + " vertices is not a tree");
}

Graph from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) throw InputError("graph must have at least one vertex");
  return Graph(n, std::move(edges));
}

Tree star(int m) {
  if (m < 1) throw InputError("star needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 1; i < m; ++i) e.emplace_back(0, i);
  return Tree(Graph(m, std::move(e)));
}

Tree path(int m) {
  if (m < 1) throw InputError("path needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 1; i < m; ++i) e.emplace_back(i - 1, i);
  return Tree(Graph(m, std::move(e)));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph rooted_product_k2(const Graph& x) {
  const int n = x.order();
  std::vector<Edge> e = x.edges();
  for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
  return Graph(2 * n, std::move(e));
}

Tree rooted_product_k2(const Tree& x) { return Tree(rooted_product_k2(x.graph())); }

Tree tree_from_parents(const std::vector<int>& parent) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < parent.size(); ++i) e.emplace_back(parent[i], static_cast<int>(i));
  return Tree(Graph(static_cast<int>(parent.size()), std::move(e)));
}

namespace {

std::vector<Vertex> tree_centres(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> c(n);
    std::iota(c.begin(), c.end(), 0);
    return c;
  }
  std::vector<int> deg = t.graph().degree_sequence();
  std::vector<Vertex> layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      deg[v] = 0;
      for (Vertex w : t.neighbors(v))
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string ahu(const Tree& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(ahu(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

}  // namespace

std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : tree_centres(t)) {
    std::string s = ahu(t, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n)) throw InputError("edge list: missing vertex count on line 1");
  if (n < 1) throw InputError("edge list: vertex count must be positive");
  std::vector<Edge> edges;
  std::string line;
  std::getline(in, line);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw InputError("edge list: line " + std::to_string(lineno) + " has a single endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge list: line " + std::to_string(lineno) + " endpoint out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_auto(const std::string& text) {
  // Edge lists start with a decimal vertex count alone on the first line.
  auto first_end = text.find('\n');
  std::string first = text.substr(0, first_end);
  while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
  bool numeric = !first.empty() && std::all_of(first.begin(), first.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (numeric) return parse_edge_list(text);
  std::string g6 = first;
  if (g6.rfind(">>graph6<<", 0) == 0) g6 = g6.substr(10);
  return parse_graph6(g6);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_auto(buf.str());
}

}  // namespace amm
