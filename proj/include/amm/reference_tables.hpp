#pragma once

#include <map>
#include <string>
#include <vector>

#include "amm/census.hpp"

namespace amm {

/// Version tag of the embedded reference data.
inline constexpr int kReferenceTablesVersion = 1;

/// Reference rank census of all trees on 2..20 vertices: per (n, rank) the
/// number of trees and how many of them have simple eigenvalues.
const std::vector<CensusRecord>& reference_census();
std::vector<CensusRecord> reference_census(int n);

/// Reference minimum rank per order, n = 2..20.
const std::map<int, int>& reference_min_rank();

/// Number of free trees on n vertices (OEIS A000055), n = 1..20.
std::uint64_t reference_tree_count(int n);

struct KnownDiscrepancy {
  int n;
  std::string summary;
};

/// Places where the reference data disagrees with itself.
const std::vector<KnownDiscrepancy>& known_discrepancies();

}  // namespace amm
