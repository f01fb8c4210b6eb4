#include "mds/generators.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

namespace mds {

namespace {

// Appends `sub` to `out`, hanging its root below `attach` (-1 for a new root).
void append_subtree(ParentArray& out, const ParentArray& sub, int attach) {
  const int offset = static_cast<int>(out.size());
  for (std::size_t i = 0; i < sub.size(); ++i) out.push_back(i == 0 ? attach : sub[i] + offset);
}

struct RootedCache {
  std::mutex mutex;
  std::array<std::vector<ParentArray>, kMaxTreeOrder + 1> by_size;
  std::array<bool, kMaxTreeOrder + 1> built{};

  // Caller holds the mutex.
  void build(int size) {
    if (built[size]) return;
    std::vector<int> weights;
    std::vector<const ParentArray*> items;
    for (int s = 1; s < size; ++s) {
      build(s);
      for (const auto& t : by_size[s]) {
        weights.push_back(s);
        items.push_back(&t);
      }
    }
    MultisetWalker walker(weights, static_cast<int>(items.size()) - 1, size - 1);
    std::vector<ParentArray> out;
    while (walker.next()) {
      ParentArray tree{-1};
      for (int pick : walker.picks()) append_subtree(tree, *items[pick], 0);
      out.push_back(std::move(tree));
    }
    by_size[size] = std::move(out);
    built[size] = true;
  }
};

RootedCache& rooted_cache() {
  static RootedCache cache;
  return cache;
}

void check_tree_order(int n) {
  if (n < 1 || n > kMaxTreeOrder)
    throw std::out_of_range("tree order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxTreeOrder));
}

}  // namespace

const std::vector<ParentArray>& rooted_tree_catalog(int size) {
  check_tree_order(size);
  auto& cache = rooted_cache();
  std::lock_guard lock(cache.mutex);
  cache.build(size);
  return cache.by_size[size];
}

TreeStream::TreeStream(int n) : n_(n) {
  check_tree_order(n);
  const int cap = (n - 1) / 2;
  for (int s = 1; s <= cap; ++s)
    for (const auto& t : rooted_tree_catalog(s)) {
      branch_weights_.push_back(s);
      branches_.push_back(&t);
    }
  walker_.emplace(branch_weights_, static_cast<int>(branches_.size()) - 1, n - 1);
}

std::optional<ParentArray> TreeStream::next_parents() {
  if (phase_ == 0) {
    if (walker_->next()) {
      ParentArray tree{-1};
      for (int pick : walker_->picks()) append_subtree(tree, *branches_[pick], 0);
      return tree;
    }
    phase_ = 1;
    if (n_ % 2 != 0) return std::nullopt;
    // Bicentroidal trees: unordered pairs of rooted halves of order n/2.
    branch_weights_.clear();
    branches_.clear();
    for (const auto& t : rooted_tree_catalog(n_ / 2)) {
      branch_weights_.push_back(n_ / 2);
      branches_.push_back(&t);
    }
    walker_.emplace(branch_weights_, static_cast<int>(branches_.size()) - 1, n_);
  }
  if (phase_ == 1 && walker_->next()) {
    auto picks = walker_->picks();
    ParentArray tree;
    append_subtree(tree, *branches_[picks[0]], -1);
    append_subtree(tree, *branches_[picks[1]], 0);
    return tree;
  }
  phase_ = 2;
  return std::nullopt;
}

std::optional<Graph> TreeStream::next() {
  auto parents = next_parents();
  if (!parents) return std::nullopt;
  return graph_from_parents(*parents);
}

TreeStream gen_free_trees(int n) { return TreeStream(n); }

const std::vector<ParentArray>& free_tree_catalog(int n) {
  check_tree_order(n);
  static std::mutex mutex;
  static std::array<std::vector<ParentArray>, kMaxTreeOrder + 1> by_order;
  static std::array<bool, kMaxTreeOrder + 1> built{};
  std::lock_guard lock(mutex);
  if (!built[n]) {
    TreeStream stream(n);
    while (auto t = stream.next_parents()) by_order[n].push_back(std::move(*t));
    built[n] = true;
  }
  return by_order[n];
}

Graph forest_from_parents(const std::vector<const ParentArray*>& parts) {
  ParentArray all;
  for (const ParentArray* p : parts) append_subtree(all, *p, -1);
  return graph_from_parents(all);
}

ForestStream::ForestStream(int n, int min_component) {
  if (n < 1 || n > kMaxForestOrder)
    throw std::out_of_range("forest order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxForestOrder));
  if (min_component < 1) throw std::out_of_range("min_component must be at least 1");
  for (int s = min_component; s <= n; ++s)
    for (const auto& t : free_tree_catalog(s)) {
      weights_.push_back(s);
      items_.push_back(&t);
    }
  walker_.emplace(weights_, static_cast<int>(items_.size()) - 1, n);
}

std::optional<Graph> ForestStream::next() {
  if (!walker_->next()) return std::nullopt;
  std::vector<const ParentArray*> parts;
  for (int pick : walker_->picks()) parts.push_back(items_[pick]);
  return forest_from_parents(parts);
}

ForestStream gen_forests(int n, int min_component) { return ForestStream(n, min_component); }

}  // namespace mds
