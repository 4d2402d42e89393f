#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "amm/matrix.hpp"

namespace amm {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
/// Edges are stored sorted with u < v.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on out-of-range endpoints, self-loops or duplicates.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const { return n_ >= 1 && size() == static_cast<std::size_t>(n_ - 1) && is_connected(); }

  /// Dense 0/1 adjacency matrix.
  template <typename T = int>
  Matrix<T> adjacency() const {
    Matrix<T> a(n_, n_, T(0));
    for (auto [u, v] : edges_) a(u, v) = a(v, u) = T(1);
    return a;
  }

  /// Subgraph induced on the vertices not in `removed`; the survivors keep
  /// their relative order.
  Graph remove_vertices(const std::vector<Vertex>& removed) const;

  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A graph certified to be connected and acyclic.
class Tree {
 public:
  /// Throws DomainError if `g` is not a tree.
  explicit Tree(Graph g);

  const Graph& graph() const noexcept { return g_; }
  operator const Graph&() const noexcept { return g_; }
  int order() const noexcept { return g_.order(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return g_.neighbors(v); }
  int degree(Vertex v) const { return g_.degree(v); }

  friend bool operator==(const Tree& a, const Tree& b) { return a.g_ == b.g_; }

 private:
  Graph g_;
};

Graph from_edges(int n, std::vector<Edge> edges);

/// K_{1,m-1} on m vertices, centre 0.
Tree star(int m);
/// Path 0-1-...-(m-1).
Tree path(int m);
Graph empty_graph(int n);

/// Attach a pendant vertex n+i to every vertex i. Adjacency [[A, I], [I, 0]].
Graph rooted_product_k2(const Graph& x);
Tree rooted_product_k2(const Tree& x);

/// Tree from a parent array (parent[0] ignored, parent[i] < i not required).
Tree tree_from_parents(const std::vector<int>& parent);

/// Isomorphism invariant of a tree: AHU encoding rooted at a centre
/// (the smaller encoding when there are two centres).
std::string canonical_form(const Tree& t);

/// Edge-list text: first line n, then one "u v" pair per line.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Reads a graph from a file holding either graph6 or the edge-list form.
Graph read_graph_file(const std::string& path);
/// Same detection applied to an in-memory string.
Graph parse_graph_auto(const std::string& text);

}  // namespace amm
