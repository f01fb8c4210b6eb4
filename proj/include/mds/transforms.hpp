#pragma once

#include <stdexcept>
#include <vector>

#include "mds/graph.hpp"

namespace mds {

class TransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Moves leaf u from its degree-2 support vertex v onto v's other
/// neighbor x: T - uv + ux. Requires v of degree 2, u a leaf, x a non-leaf.
Graph lemma1_transform(const Graph& tree, int u, int v, int x);

/// Reattaches x through t's leaf y: T - xt + xy. Requires x of degree
/// k + 1 >= 3 whose neighbors other than t are all leaves, t a non-leaf,
/// and y a leaf adjacent to t.
Graph lemma2_transform(const Graph& tree, int x, int t, int y);

/// T - u for a leaf u of a vertex v adjacent to at least three leaves.
/// Vertices above u shift down by one.
Graph lemma3_delete_leaf(const Graph& tree, int v, int u);

struct Lemma1Instance {
  int u, v, x;
};
struct Lemma2Instance {
  int x, t, y;
};

/// Every admissible (u, v, x) / (x, t, y) triple of a tree.
std::vector<Lemma1Instance> lemma1_instances(const Graph& tree);
std::vector<Lemma2Instance> lemma2_instances(const Graph& tree);

/// Some component of T - {u, v, x} - N(x) has at least three vertices.
bool lemma1_strict_condition(const Graph& tree, const Lemma1Instance& at);

/// |V(T) \ {u_1..u_k, x, y}| >= 3, with u_i the leaves of x.
bool lemma2_strict_condition(const Graph& tree, const Lemma2Instance& at);

}  // namespace mds
