#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amm/graph.hpp"
#include "amm/numeric.hpp"
#include "amm/rat_matrix.hpp"

namespace amm {

/// (m_0, m_1, ..., m_{floor(n/2)}): number of k-edge matchings, from a rooted
/// DP keeping, per vertex, the matching polynomials of its subtree with the
/// root unmatched and with the root matched. Works for any forest; throws
/// DomainError if `f` has a cycle.
std::vector<Integer> forest_matching_counts(const Graph& f);
std::vector<Integer> matching_counts(const Tree& t);

/// Greedy leaf matching on a forest: repeatedly match a leaf to its neighbour.
bool has_perfect_matching(const Graph& f);

/// Least v such that T - v has a perfect matching; nullopt when none (always
/// for even n).
std::optional<Vertex> near_perfect_vertex(const Tree& t);

/// Lexicographically least (leaf u, neighbour v) with deg v == 2.
/// Throws DomainError for n < 3 or, when no pair exists, DomainError if the
/// tree has a repeated eigenvalue and ConsistencyError if it does not.
std::pair<Vertex, Vertex> leaf_next_to_degree_two(const Tree& t);

enum class CertificateCase { C1, C2, C3 };
std::string to_string(CertificateCase c);

/// 3x3 minor of the coefficient matrix witnessing rank >= 3.
struct LowerBoundCertificate {
  CertificateCase kind = CertificateCase::C1;
  std::vector<Vertex> vertices;  // rows: u, v, w (C1, C2) or u, v, z (C3)
  std::vector<int> powers;       // columns as powers of t: {1 or 0, n-3, n-1}
  IntMatrix submatrix;
  Integer det;
  Integer closed_form_det;  // derived closed form for this case
  Integer printed_closed_form_det;  // the formula as usually stated
  int ell = 0;  // deg(w) in C1/C2, deg(z) in C3
  Integer q;    // C1 only: m_{k-2}(T - {u, v, w})
  // C1 side claims: m_{k-1}(T - {u,v}) == 1, m_{k-1}(T - v) == 1, ell == 2 implies q >= 2
  bool side_claims_hold = true;
  std::string graph6;
};

/// Follows the case split of the rank >= 3 argument and checks the
/// determinant against its closed form. Throws DomainError for n < 4, for
/// P4, or for a repeated eigenvalue; ConsistencyError if the determinant is
/// zero or differs from the closed form.
LowerBoundCertificate lower_bound_certificate(const Tree& t);

/// {case, vertices, submatrix, det, closed_form_det, graph6} plus the
/// printed closed form, the column powers and the auxiliary values.
std::string to_json(const LowerBoundCertificate& c);

/// Coefficient of t^power in phi(F) for a forest on `order` vertices with
/// matching counts m: (-1)^k m_k when power = order - 2k, else 0.
Integer char_coefficient_from_matchings(const std::vector<Integer>& m, int order, int power);

}  // namespace amm
