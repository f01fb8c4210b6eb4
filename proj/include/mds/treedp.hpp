#pragma once

#include <array>

#include "mds/count.hpp"
#include "mds/graph.hpp"

namespace mds {

/// Root states of the subtree DP. "Pending" states carry a requirement that
/// only the parent side can discharge.
enum class DpState : int {
  OutBlocked,   // v ∉ S; adding v is already impossible from below.
  OutFree0,     // v ∉ S; no child in S. Needs parent in S and parent paired.
  OutFree1,     // v ∉ S; one child in S, that child unpaired. Needs parent in S.
  InSingle,     // v ∈ S; no child in S; no pending requirement.
  InSingleNeed, // v ∈ S; no child in S; some OutFree0 child needs v paired via the parent.
  InPaired,     // v ∈ S; exactly one child in S.
};
inline constexpr int kDpStates = 6;

/// Number of labelled subtree configurations ending in each root state.
struct DpStateVector {
  std::array<Count, kDpStates> counts{};

  Count& operator[](DpState s) { return counts[static_cast<int>(s)]; }
  Count operator[](DpState s) const { return counts[static_cast<int>(s)]; }

  /// Configurations that are maximal when the subtree root is the global root.
  Count maximal_at_root() const;
  Count total() const;
};

/// State vector of the subtree rooted at `root` of the tree containing it.
DpStateVector subtree_states(const Graph& g, int root);

/// Φ(T) for a tree, rooted at `root`. Throws GraphError on non-tree input.
Count count_mds_tree(const Graph& tree, int root = 0);

/// Φ(F) for a forest: product over components. Φ of the empty graph is 1.
Count count_mds_forest(const Graph& forest);

}  // namespace mds
