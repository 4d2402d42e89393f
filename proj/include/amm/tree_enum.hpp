#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "amm/graph.hpp"

namespace amm {

/// Generates every free tree on n vertices exactly once, as canonical level
/// sequences rooted at a centre. Wright-Richmond-Odlyzko-McKay successor
/// rule layered over Beyer-Hedetniemi rooted-tree succession, so the
/// amortised cost per tree is constant apart from the O(n) validity split.
/// The order is a pure function of n.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);

  /// Next tree, or nullopt once exhausted.
  std::optional<Tree> next();

  /// Level sequence of the tree most recently returned by next().
  const std::vector<int>& levels() const noexcept { return last_; }

 private:
  int n_;
  bool done_ = false;
  bool first_ = true;
  std::vector<int> layout_;
  std::vector<int> last_;
};

/// Tree whose vertex i sits at depth levels[i] below vertex 0, attached to
/// the closest preceding vertex one level up.
Tree tree_from_levels(const std::vector<int>& levels);

std::vector<Tree> enumerate_trees(int n);
void for_each_tree(int n, const std::function<void(const Tree&)>& visit);
std::uint64_t count_trees(int n);

/// Uniform random labelled tree from a random Pruefer sequence.
template <typename Rng>
Tree random_tree(int n, Rng& rng);

}  // namespace amm

#include <random>

namespace amm {

Tree tree_from_pruefer(const std::vector<int>& code, int n);

template <typename Rng>
Tree random_tree(int n, Rng& rng) {
  if (n <= 2) return path(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = pick(rng);
  return tree_from_pruefer(code, n);
}

}  // namespace amm
