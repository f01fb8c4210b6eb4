#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mds/graph.hpp"
#include "mds/multiset_walker.hpp"

namespace mds {

inline constexpr int kMaxTreeOrder = 20;
inline constexpr int kMaxForestOrder = 18;

/// Number of unlabelled free trees of order n, for n = 0..20.
inline constexpr std::array<std::uint64_t, kMaxTreeOrder + 1> kFreeTreeCensus = {
    1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065};

/// Rooted trees as parent arrays in preorder (root first, parent[0] = -1).
using ParentArray = std::vector<int>;

/// All rooted trees of `size` vertices, each isomorphism class once.
/// Cached; safe to call from several threads.
const std::vector<ParentArray>& rooted_tree_catalog(int size);

/// Streams every free tree of order n exactly once, in a fixed order.
///
/// A tree with a unique centroid is the centroid plus a multiset of rooted
/// branches, each smaller than n/2. A tree with two centroids is an
/// unordered pair of rooted trees of order n/2 joined at their roots.
class TreeStream {
 public:
  explicit TreeStream(int n);
  TreeStream(const TreeStream&) = delete;
  TreeStream& operator=(const TreeStream&) = delete;
  TreeStream(TreeStream&&) = default;
  TreeStream& operator=(TreeStream&&) = default;

  int order() const { return n_; }

  /// Parent array of the next tree (vertex 0 is a centroid), or nullopt.
  std::optional<ParentArray> next_parents();
  std::optional<Graph> next();

 private:
  int n_;
  int phase_ = 0;
  std::vector<int> branch_weights_;
  std::vector<const ParentArray*> branches_;
  std::optional<MultisetWalker> walker_;
};

/// Throws std::out_of_range unless 1 <= n <= kMaxTreeOrder.
TreeStream gen_free_trees(int n);

/// Free trees of order n, materialized and cached.
const std::vector<ParentArray>& free_tree_catalog(int n);

/// Streams every forest of order n whose components all have at least
/// `min_component` vertices, each isomorphism class once. Parts are taken in
/// decreasing order; equal-order parts are multisets over the tree catalog.
class ForestStream {
 public:
  ForestStream(int n, int min_component);
  ForestStream(const ForestStream&) = delete;
  ForestStream& operator=(const ForestStream&) = delete;
  ForestStream(ForestStream&&) = default;
  ForestStream& operator=(ForestStream&&) = default;

  std::optional<Graph> next();

 private:
  std::vector<int> weights_;
  std::vector<const ParentArray*> items_;
  std::optional<MultisetWalker> walker_;
};

/// Throws std::out_of_range unless 1 <= n <= kMaxForestOrder and min_component >= 1.
ForestStream gen_forests(int n, int min_component = 1);

/// Concatenates components into one forest; each component keeps its order.
Graph forest_from_parents(const std::vector<const ParentArray*>& parts);

}  // namespace mds
