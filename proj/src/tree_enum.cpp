#include "amm/tree_enum.hpp"

#include <algorithm>
#include <queue>

#include "amm/errors.hpp"

namespace amm {

namespace {

// Beyer-Hedetniemi successor of a rooted level sequence. With p >= 0 the
// pivot is forced instead of being the last non-1 entry.
bool next_rooted(std::vector<int>& seq, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(seq.size()) - 1;
    while (p > 0 && seq[p] == 1) --p;
  }
  if (p == 0) return false;
  int q = p - 1;
  while (seq[q] != seq[p] - 1) --q;
  for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
  return true;
}

// Splits at the second child of the root: the leftmost root subtree (shifted
// up one level) and everything else.
void split(const std::vector<int>& seq, std::vector<int>& left, std::vector<int>& rest) {
  std::size_t m = seq.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  left.clear();
  rest.assign(1, 0);
  for (std::size_t i = 1; i < m; ++i) left.push_back(seq[i] - 1);
  for (std::size_t i = m; i < seq.size(); ++i) rest.push_back(seq[i]);
}

// Returns false when the successor chain runs out.
bool next_free(std::vector<int>& seq) {
  std::vector<int> left, rest;
  split(seq, left, rest);
  const int left_h = *std::max_element(left.begin(), left.end());
  const int rest_h = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_h >= left_h;
  if (valid && rest_h == left_h) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return true;
  const int p = static_cast<int>(left.size());
  const bool tall = seq[p] > 2;
  if (!next_rooted(seq, p)) return false;
  if (tall) {
    split(seq, left, rest);
    const int h = *std::max_element(left.begin(), left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t k = 0; k < len; ++k) seq[seq.size() - len + k] = static_cast<int>(k) + 1;
  }
  return true;
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1) throw InputError("tree order must be positive");
  // path rooted at its centre
  for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
}

std::optional<Tree> FreeTreeGenerator::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    last_ = layout_;
    return tree_from_levels(last_);
  }
  if (!first_) {
    if (!next_rooted(layout_)) {
      done_ = true;
      return std::nullopt;
    }
  }
  first_ = false;
  if (!next_free(layout_)) {
    done_ = true;
    return std::nullopt;
  }
  last_ = layout_;
  return tree_from_levels(last_);
}

Tree tree_from_levels(const std::vector<int>& levels) {
  std::vector<int> parent(levels.size(), -1);
  std::vector<int> last_at_level(levels.size() + 1, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int l = levels[i];
    if (l > 0) parent[i] = last_at_level[l - 1];
    last_at_level[l] = static_cast<int>(i);
  }
  return tree_from_parents(parent);
}

std::vector<Tree> enumerate_trees(int n) {
  std::vector<Tree> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

void for_each_tree(int n, const std::function<void(const Tree&)>& visit) {
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) visit(*t);
}

std::uint64_t count_trees(int n) {
  std::uint64_t c = 0;
  FreeTreeGenerator gen(n);
  while (gen.next()) ++c;
  return c;
}

Tree tree_from_pruefer(const std::vector<int>& code, int n) {
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return Tree(Graph(n, std::move(edges)));
}

}  // namespace amm
