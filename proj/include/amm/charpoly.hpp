#pragma once

#include <vector>

#include "amm/graph.hpp"
#include "amm/poly.hpp"

namespace amm {

/// det(tI - A) by Faddeev-LeVerrier on the integer adjacency matrix. Every
/// division by k is checked to be exact.
IntPoly char_poly(const Graph& x);

/// Characteristic polynomial of a forest from the vertex-removal recurrence
/// phi(F) = t phi(F - r) - sum_{w ~ r} phi(F - r - w), evaluated bottom-up
/// over rooted components. Throws DomainError if `f` has a cycle.
IntPoly forest_char_poly(const Graph& f);

/// As forest_char_poly, restricted to trees.
IntPoly matching_char_poly(const Tree& t);

/// Entry u is phi(X - u, t). Forests use the recurrence, other graphs
/// Faddeev-LeVerrier. Throws DomainError for n < 2.
std::vector<IntPoly> vertex_deleted_polys(const Graph& x);

}  // namespace amm

namespace amm {

/// Forest recurrence when `x` is a forest, Faddeev-LeVerrier otherwise.
IntPoly char_poly_fast(const Graph& x);

}  // namespace amm
