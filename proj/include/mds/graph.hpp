#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mds {

inline constexpr int kMaxVertices = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of {0..63} stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(VertexSet other) const { return (bits_ & other.bits_) == 0; }

  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) f(std::countr_zero(rest));
  }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with both adjacency lists and
/// adjacency bitsets. Immutable once built.
class Graph {
 public:
  /// The empty graph on zero vertices.
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  VertexSet neighbor_set(int v) const { return adj_bits_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const { return adj_bits_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::first_n(order()); }

  /// Edges as (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_bits_ == b.adj_bits_; }

 private:
  friend Graph make_graph(int n, std::span<const Edge> edges);

  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> adj_bits_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph on n vertices (0 <= n <= 64; n = 0 is the empty graph).
/// Duplicate edges are merged; self-loops, out-of-range endpoints and an
/// out-of-range n throw GraphError.
Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Graph on parent-array form: parent[v] is v's parent, or -1 for roots.
Graph graph_from_parents(std::span<const int> parent);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Subgraph induced by `keep`, vertices renumbered in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

Graph remove_vertex(const Graph& g, int v);

// Structural queries.
std::vector<int> leaves(const Graph& g);
std::vector<int> support_vertices(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Longest shortest-path length in edges, taken over all components.
int diameter(const Graph& g);

}  // namespace mds
