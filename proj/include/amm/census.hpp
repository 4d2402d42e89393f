#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amm/graph.hpp"

namespace amm {

enum class RankMethod { Exact, CoeffFast, Float };

/// "exact", "coeff-fast", "float"; throws InputError otherwise.
RankMethod parse_method(const std::string& name);
std::string to_string(RankMethod m);

struct TreeRank {
  int rank = 0;
  bool simple = false;
};

/// Simple flag from the squarefree test; rank by the requested method.
TreeRank classify_tree(const Tree& t, RankMethod method);

struct CensusRecord {
  int n = 0;
  int rank = 0;
  std::uint64_t trees = 0;
  std::uint64_t simple_trees = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusOptions {
  int n_min = 2;
  int n_max = 2;
  RankMethod method = RankMethod::CoeffFast;
  int threads = 1;
  std::size_t chunk_size = 1024;
  /// Empty: no checkpointing.
  std::string checkpoint_path;
  /// Stop after this many chunks have been processed in this run (the
  /// checkpoint then holds the partial state).
  std::optional<std::size_t> stop_after_chunks;
  /// Polled between chunks; set from a signal handler to interrupt.
  const std::atomic<bool>* cancel = nullptr;
};

struct CensusOutcome {
  std::vector<CensusRecord> records;  // sorted by (n, rank)
  bool complete = false;
};

/// Parallel census over all trees of each order in [n_min, n_max]. Chunks
/// of the canonical enumeration are tallied independently and folded in
/// chunk order, so the records do not depend on the thread count. With a
/// checkpoint path, progress is persisted after every chunk and a later
/// run resumes from it. Throws InputError on an incompatible checkpoint.
CensusOutcome run_census(const CensusOptions& options);

/// Header "n,rank,trees,simple_trees".
std::string census_csv(const std::vector<CensusRecord>& records);
std::vector<CensusRecord> parse_census_csv(const std::string& text);

}  // namespace amm
