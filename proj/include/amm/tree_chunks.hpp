#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "amm/graph.hpp"

namespace amm {

struct TreeChunk {
  std::size_t index = 0;
  std::uint64_t first = 0;  // enumeration index of trees.front()
  std::vector<Tree> trees;
};

/// Single producer, parallel consumers: the calling thread enumerates the
/// trees of order n in canonical order, cuts them into chunks of
/// `chunk_size` and hands each chunk to `work` on one of `threads` workers.
/// Chunks for which `skip` returns true are enumerated but not dispatched.
/// When `stop` becomes true no further chunks are dispatched; chunks already
/// handed out still finish.
struct DispatchResult {
  std::size_t chunks = 0;  // chunks cut so far (all of them when exhausted)
  bool exhausted = false;  // the enumeration ran to its end
};

DispatchResult dispatch_tree_chunks(int n, std::size_t chunk_size, int threads,
                                 const std::function<void(const TreeChunk&)>& work,
                                 const std::function<bool(std::size_t)>& skip = {},
                                 const std::atomic<bool>* stop = nullptr);

}  // namespace amm
