#pragma once

#include <string>
#include <vector>

#include "amm/matrix.hpp"
#include "amm/numeric.hpp"

namespace amm {

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

/// Fraction-free (Bareiss) rank of an integer matrix. The pivot in each
/// column is the lowest-index remaining row with a nonzero entry.
int bareiss_rank(IntMatrix m);

/// Each row multiplied by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m);

/// Rank over Q: denominator clearing followed by Bareiss elimination.
int exact_rank(const RatMatrix& m);

/// Basis of the right null space over Q, one vector per free column of the
/// reduced row echelon form.
std::vector<std::vector<Rational>> kernel_exact(const RatMatrix& m);

std::vector<Rational> multiply(const RatMatrix& m, const std::vector<Rational>& v);

bool is_symmetric(const RatMatrix& m);

/// Rows of comma-separated canonical rationals ("3/10", "1", "0").
std::string to_csv(const RatMatrix& m);
RatMatrix parse_rat_csv(const std::string& text);

/// {"rows": r, "cols": c, "entries": [[{"num": "3", "den": "10"}, ...], ...]}
/// Numerators and denominators are decimal strings so they survive any size.
std::string to_json(const RatMatrix& m);
RatMatrix parse_rat_json(const std::string& text);

}  // namespace amm
