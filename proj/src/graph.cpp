#include "mds/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace mds {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

Graph make_graph(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  Graph g;
  g.adj_.assign(n, {});
  g.adj_bits_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(n - 1));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (g.adj_bits_[u].contains(v)) continue;
    g.adj_bits_[u].insert(v);
    g.adj_bits_[v].insert(u);
    ++g.edge_count_;
  }
  // Neighbor lists in ascending order so every derived traversal is deterministic.
  for (int u = 0; u < n; ++u) g.adj_[u] = g.adj_bits_[u].to_vector();
  return g;
}

Graph graph_from_parents(std::span<const int> parent) {
  std::vector<Edge> edges;
  edges.reserve(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent[v] >= 0) edges.emplace_back(parent[v], static_cast<int>(v));
  return make_graph(static_cast<int>(parent.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return make_graph(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size does not match graph order");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return make_graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> index(g.order(), -1);
  int next = 0;
  keep.for_each([&](int v) {
    if (v < g.order()) index[v] = next++;
  });
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return make_graph(next, edges);
}

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " not in graph");
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

std::vector<int> leaves(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<int> support_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](int w) { return g.degree(w) == 1; })) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexSet seen;
  for (int s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next = next | g.neighbor_set(v); });
      frontier = next - comp;
      comp = comp | frontier;
    }
    seen = seen | comp;
    out.push_back(comp.to_vector());
  }
  return out;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + components(g).size() == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && components(g).size() == 1;
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto dist = distances_from(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

}  // namespace mds
