#include "amm/tree_chunks.hpp"

#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

#include "amm/errors.hpp"
#include "amm/tree_enum.hpp"

namespace amm {

DispatchResult dispatch_tree_chunks(int n, std::size_t chunk_size, int threads,
                                 const std::function<void(const TreeChunk&)>& work,
                                 const std::function<bool(std::size_t)>& skip, const std::atomic<bool>* stop) {
  if (chunk_size == 0) throw InputError("chunk size must be positive");
  if (threads < 1) threads = 1;

  std::mutex mu;
  std::condition_variable ready, space;
  std::deque<TreeChunk> queue;
  bool finished = false;
  std::exception_ptr failure;
  const std::size_t max_queued = static_cast<std::size_t>(threads) * 2;

  auto worker = [&] {
    for (;;) {
      TreeChunk chunk;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return !queue.empty() || finished; });
        if (queue.empty()) return;
        chunk = std::move(queue.front());
        queue.pop_front();
      }
      space.notify_one();
      try {
        work(chunk);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  if (threads > 1)
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

  auto stopped = [&] {
    if (stop && stop->load()) return true;
    std::lock_guard lock(mu);
    return failure != nullptr;
  };

  FreeTreeGenerator gen(n);
  std::size_t index = 0;
  std::uint64_t position = 0;
  bool exhausted = false;
  while (!exhausted && !stopped()) {
    TreeChunk chunk;
    chunk.index = index;
    chunk.first = position;
    const bool skipping = skip && skip(index);
    std::size_t taken = 0;
    while (taken < chunk_size) {
      auto t = gen.next();
      if (!t) {
        exhausted = true;
        break;
      }
      ++taken;
      ++position;
      if (!skipping) chunk.trees.push_back(std::move(*t));
    }
    if (taken == 0) break;
    ++index;
    if (skipping) continue;
    if (threads == 1) {
      work(chunk);
      continue;
    }
    std::unique_lock lock(mu);
    space.wait(lock, [&] { return queue.size() < max_queued; });
    queue.push_back(std::move(chunk));
    lock.unlock();
    ready.notify_one();
  }
  {
    std::lock_guard lock(mu);
    finished = true;
  }
  ready.notify_all();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return {index, exhausted};
}

}  // namespace amm
