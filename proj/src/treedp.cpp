#include "mds/treedp.hpp"

#include <vector>

namespace mds {

Count DpStateVector::maximal_at_root() const {
  return checked_add(checked_add((*this)[DpState::OutBlocked], (*this)[DpState::InSingle]),
                     (*this)[DpState::InPaired]);
}

Count DpStateVector::total() const {
  Count t = 0;
  for (Count c : counts) t = checked_add(t, c);
  return t;
}

namespace {

using S = DpState;

// Folds one child's state vector into the parent's running accumulators.
//
// Parent outside S tracks (no S-child, one unpaired S-child, blocked).
// Children that still need the parent in S are rejected here.
//
// Parent inside S tracks (no S-child, no S-child but a pending pairing
// requirement, exactly one S-child). A paired child cannot join an S parent.
struct Accumulator {
  Count out_none = 1, out_one = 0, out_blocked = 0;
  Count in_none = 1, in_need = 0, in_paired = 0;

  void absorb(const DpStateVector& c) {
    const Count ob = c[S::OutBlocked];
    const Count single = c[S::InSingle];
    const Count paired = c[S::InPaired];

    const Count next_out_none = checked_mul(out_none, ob);
    const Count next_out_one = checked_add(checked_mul(out_none, single), checked_mul(out_one, ob));
    Count next_out_blocked = checked_mul(out_none, paired);
    next_out_blocked = checked_add(next_out_blocked, checked_mul(out_one, checked_add(single, paired)));
    next_out_blocked = checked_add(next_out_blocked, checked_mul(out_blocked, checked_add(ob, checked_add(single, paired))));

    const Count neutral = checked_add(ob, c[S::OutFree1]);
    const Count free0 = c[S::OutFree0];
    const Count joins = checked_add(single, c[S::InSingleNeed]);
    const Count next_in_none = checked_mul(in_none, neutral);
    const Count next_in_need = checked_add(checked_mul(in_none, free0), checked_mul(in_need, checked_add(neutral, free0)));
    Count next_in_paired = checked_mul(checked_add(in_none, in_need), joins);
    next_in_paired = checked_add(next_in_paired, checked_mul(in_paired, checked_add(neutral, free0)));

    out_none = next_out_none;
    out_one = next_out_one;
    out_blocked = next_out_blocked;
    in_none = next_in_none;
    in_need = next_in_need;
    in_paired = next_in_paired;
  }

  DpStateVector finish() const {
    DpStateVector v;
    v[S::OutFree0] = out_none;
    v[S::OutFree1] = out_one;
    v[S::OutBlocked] = out_blocked;
    v[S::InSingle] = in_none;
    v[S::InSingleNeed] = in_need;
    v[S::InPaired] = in_paired;
    return v;
  }
};

// Iterative post-order over the component of `root`; returns the root's vector.
DpStateVector solve_component(const Graph& g, int root, std::vector<int>& parent) {
  std::vector<int> order;
  order.reserve(g.order());
  std::vector<int> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : g.neighbors(v))
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<Accumulator> acc(g.order());
  std::vector<DpStateVector> result(g.order());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    result[v] = acc[v].finish();
    if (v != root) acc[parent[v]].absorb(result[v]);
  }
  return result[root];
}

}  // namespace

DpStateVector subtree_states(const Graph& g, int root) {
  if (root < 0 || root >= g.order()) throw GraphError("root outside graph");
  if (!is_forest(g)) throw GraphError("tree DP requires an acyclic graph");
  std::vector<int> parent(g.order(), -1);
  return solve_component(g, root, parent);
}

Count count_mds_tree(const Graph& tree, int root) {
  if (!is_tree(tree)) throw GraphError("count_mds_tree requires a tree");
  if (root < 0 || root >= tree.order()) throw GraphError("root outside graph");
  std::vector<int> parent(tree.order(), -1);
  return solve_component(tree, root, parent).maximal_at_root();
}

Count count_mds_forest(const Graph& forest) {
  if (!is_forest(forest)) throw GraphError("count_mds_forest requires a forest; input contains a cycle");
  std::vector<int> parent(forest.order(), -1);
  Count product = 1;
  for (int v = 0; v < forest.order(); ++v)
    if (parent[v] < 0) product = checked_mul(product, solve_component(forest, v, parent).maximal_at_root());
  return product;
}

}  // namespace mds
