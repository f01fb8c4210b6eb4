#include "mds/canonical.hpp"

#include <algorithm>

namespace mds {

namespace {

std::string encode(const Graph& g, int v, int parent) {
  std::vector<std::string> children;
  for (int w : g.neighbors(v))
    if (w != parent) children.push_back(encode(g, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

}  // namespace

std::string rooted_code(const Graph& g, int root) { return encode(g, root, -1); }

std::vector<int> tree_centers(const Graph& g, int v) {
  // Peel leaves layer by layer within v's component.
  auto dist = distances_from(g, v);
  std::vector<int> remaining_degree(g.order(), 0);
  std::vector<int> layer;
  int left = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (dist[u] < 0) continue;
    ++left;
    remaining_degree[u] = g.degree(u);
    if (remaining_degree[u] <= 1) layer.push_back(u);
  }
  while (left > 2) {
    std::vector<int> next;
    for (int u : layer) {
      --left;
      for (int w : g.neighbors(u))
        if (--remaining_degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalForestCode canonical_code(const Graph& g) {
  if (!is_forest(g)) throw GraphError("canonical_code requires a forest; input contains a cycle");
  std::vector<std::string> parts;
  for (const auto& comp : components(g)) {
    std::string best;
    for (int c : tree_centers(g, comp.front())) {
      std::string code = rooted_code(g, c);
      if (best.empty() || code < best) best = std::move(code);
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return CanonicalForestCode(std::move(out));
}

}  // namespace mds
