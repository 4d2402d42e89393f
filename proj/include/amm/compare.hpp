#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "amm/census.hpp"

namespace amm {

struct ComparisonOptions {
  /// Collect graph6 certificates for trees in mismatched cells (enumerates
  /// the affected orders again).
  bool certificates = true;
  std::size_t certificate_limit = 5;
  int certificate_max_order = 14;
  RankMethod method = RankMethod::CoeffFast;
};

struct CellMismatch {
  int n = 0;
  int rank = 0;
  std::uint64_t trees = 0, simple_trees = 0;              // computed
  std::uint64_t ref_trees = 0, ref_simple_trees = 0;      // reference
  std::vector<std::string> certificates;
};

struct ComparisonReport {
  std::vector<CellMismatch> mismatches;
  std::map<int, std::pair<int, int>> min_rank;  // n -> (computed, reference)
  std::vector<int> min_rank_mismatches;
  std::vector<int> total_mismatches;  // orders whose tree total is off
  /// Orders where the computed table differs from the reference one but the
  /// difference sits on a known self-contradiction and all three rank
  /// methods agree.
  std::vector<int> sanctioned;
  std::vector<std::string> notes;
  bool ok = true;

  std::string text() const;
};

/// Cell-by-cell comparison of census records against the reference tables,
/// the derived minimum-rank row, and per-order totals.
ComparisonReport compare_tables(const std::vector<CensusRecord>& census, const ComparisonOptions& options = {});

/// True when exact, coeff-fast and float ranks coincide on every tree of order n.
bool methods_agree(int n);

}  // namespace amm
