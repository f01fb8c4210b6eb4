#include "mds/transforms.hpp"

#include <algorithm>
#include <string>

namespace mds {

namespace {

void require(bool ok, const char* lemma, const std::string& clause) {
  if (!ok) throw TransformError(std::string(lemma) + " precondition failed: " + clause);
}

bool in_range(const Graph& g, int v) { return v >= 0 && v < g.order(); }

Graph replace_edge(const Graph& g, Edge drop, Edge add) {
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (e != drop && e != Edge{drop.second, drop.first}) edges.push_back(e);
  edges.push_back(add);
  return make_graph(g.order(), edges);
}

}  // namespace

Graph lemma1_transform(const Graph& tree, int u, int v, int x) {
  constexpr const char* kName = "lemma1_transform";
  require(is_tree(tree), kName, "input must be a tree");
  require(in_range(tree, u) && in_range(tree, v) && in_range(tree, x), kName, "vertices must lie in the tree");
  require(tree.degree(v) == 2, kName, "v must have degree 2");
  require(tree.has_edge(u, v) && tree.degree(u) == 1, kName, "u must be a leaf adjacent to v");
  require(tree.has_edge(v, x) && x != u, kName, "x must be the other neighbor of v");
  require(tree.degree(x) >= 2, kName, "x must not be a leaf");
  return replace_edge(tree, {u, v}, {u, x});
}

Graph lemma2_transform(const Graph& tree, int x, int t, int y) {
  constexpr const char* kName = "lemma2_transform";
  require(is_tree(tree), kName, "input must be a tree");
  require(in_range(tree, x) && in_range(tree, t) && in_range(tree, y), kName, "vertices must lie in the tree");
  require(tree.has_edge(x, t), kName, "x must be adjacent to t");
  require(tree.degree(x) >= 3, kName, "x must have degree k + 1 >= 3");
  for (int w : tree.neighbors(x))
    require(w == t || tree.degree(w) == 1, kName, "every neighbor of x other than t must be a leaf");
  require(tree.degree(t) >= 2, kName, "t must not be a leaf");
  require(tree.has_edge(t, y) && tree.degree(y) == 1, kName, "y must be a leaf adjacent to t");
  return replace_edge(tree, {x, t}, {x, y});
}

Graph lemma3_delete_leaf(const Graph& tree, int v, int u) {
  constexpr const char* kName = "lemma3_delete_leaf";
  require(is_tree(tree), kName, "input must be a tree");
  require(in_range(tree, v) && in_range(tree, u), kName, "vertices must lie in the tree");
  auto nb = tree.neighbors(v);
  const auto leaf_count = std::count_if(nb.begin(), nb.end(), [&](int w) { return tree.degree(w) == 1; });
  require(leaf_count >= 3, kName, "v must be adjacent to at least three leaves");
  require(tree.has_edge(u, v) && tree.degree(u) == 1, kName, "u must be a leaf adjacent to v");
  return remove_vertex(tree, u);
}

std::vector<Lemma1Instance> lemma1_instances(const Graph& tree) {
  std::vector<Lemma1Instance> out;
  for (int v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) != 2) continue;
    const int a = tree.neighbors(v)[0];
    const int b = tree.neighbors(v)[1];
    if (tree.degree(a) == 1 && tree.degree(b) >= 2) out.push_back({a, v, b});
    if (tree.degree(b) == 1 && tree.degree(a) >= 2) out.push_back({b, v, a});
  }
  return out;
}

std::vector<Lemma2Instance> lemma2_instances(const Graph& tree) {
  std::vector<Lemma2Instance> out;
  for (int x = 0; x < tree.order(); ++x) {
    if (tree.degree(x) < 3) continue;
    int non_leaf = -1, non_leaves = 0;
    for (int w : tree.neighbors(x))
      if (tree.degree(w) >= 2) {
        non_leaf = w;
        ++non_leaves;
      }
    if (non_leaves != 1) continue;
    for (int y : tree.neighbors(non_leaf))
      if (tree.degree(y) == 1) out.push_back({x, non_leaf, y});
  }
  return out;
}

bool lemma1_strict_condition(const Graph& tree, const Lemma1Instance& at) {
  VertexSet removed = VertexSet::of({at.u, at.v, at.x}) | tree.neighbor_set(at.x);
  const Graph rest = induced_subgraph(tree, tree.vertices() - removed);
  for (const auto& comp : components(rest))
    if (comp.size() >= 3) return true;
  return false;
}

bool lemma2_strict_condition(const Graph& tree, const Lemma2Instance& at) {
  const int k = tree.degree(at.x) - 1;
  return tree.order() - (k + 2) >= 3;
}

}  // namespace mds
