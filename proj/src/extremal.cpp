#include "mds/extremal.hpp"

#include <stdexcept>
#include <string>

namespace mds {

namespace {

struct Builder {
  int next = 0;
  std::vector<Edge> edges;

  int vertex() { return next++; }
  void edge(int u, int v) { edges.emplace_back(u, v); }

  // Center with two pendant leaves; returns the center.
  int cherry() {
    const int c = vertex();
    edge(c, vertex());
    edge(c, vertex());
    return c;
  }

  // K_{1,k}; returns the center.
  int star(int k) {
    const int c = vertex();
    for (int i = 0; i < k; ++i) edge(c, vertex());
    return c;
  }

  Graph build() const { return make_graph(next, edges); }
};

// Arm hanging off `hub`: a P3 whose center is adjacent to the hub.
void plain_arm(Builder& b, int hub) { b.edge(hub, b.cherry()); }

// Arm hanging off `hub` through one subdivision vertex.
void subdivided_arm(Builder& b, int hub) {
  const int mid = b.vertex();
  b.edge(hub, mid);
  b.edge(mid, b.cherry());
}

void cherries(Builder& b, int count) {
  for (int i = 0; i < count; ++i) b.cherry();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph path_graph(int n) {
  Builder b;
  for (int i = 0; i < n; ++i) {
    b.vertex();
    if (i > 0) b.edge(i - 1, i);
  }
  return b.build();
}

Graph star_graph(int leaves) {
  Builder b;
  b.star(leaves);
  return b.build();
}

Graph repeat_union(const Graph& g, int copies) {
  Graph out;
  for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

Graph build_t_star(int n) {
  require(n >= 4 && n % 3 == 1, "T*_n needs n >= 4 and n ≡ 1 (mod 3); got n = " + std::to_string(n));
  Builder b;
  const int hub = b.vertex();
  for (int i = 0; i < (n - 1) / 3; ++i) plain_arm(b, hub);
  return b.build();
}

Graph build_t_star_8() {
  Builder b;
  const int a = b.star(3);
  const int c = b.star(3);
  b.edge(a + 3, c + 3);
  return b.build();
}

Graph build_t_star_9() {
  Builder b;
  const int a = b.star(3);
  const int c = b.star(3);
  const int middle = b.vertex();
  b.edge(a + 3, middle);
  b.edge(c + 3, middle);
  return b.build();
}

Graph build_f1_extremal(int n) {
  require(n >= 3, "f1 extremal forest needs n >= 3; got n = " + std::to_string(n));
  Builder b;
  if (n == 5) {
    b.star(4);
  } else if (n % 3 == 0) {
    cherries(b, n / 3);
  } else if (n % 3 == 1) {
    b.star(3);
    cherries(b, (n - 4) / 3);
  } else {
    b.star(3);
    b.star(3);
    cherries(b, (n - 8) / 3);
  }
  return b.build();
}

std::vector<Graph> build_f2_extremal(int n) {
  require(n >= 7, "second-largest extremal forests are characterized for n >= 7; got n = " + std::to_string(n));
  std::vector<Graph> out;
  const Graph p3 = path_graph(3);
  if (n % 3 == 1) {
    out.push_back(disjoint_union(build_t_star(7), repeat_union(p3, (n - 7) / 3)));
  } else if (n % 3 == 2) {
    out.push_back(disjoint_union(build_t_star_8(), repeat_union(p3, (n - 8) / 3)));
    out.push_back(disjoint_union(star_graph(4), repeat_union(p3, (n - 5) / 3)));
  } else if (n == 9) {
    out.push_back(disjoint_union(star_graph(3), star_graph(4)));
  } else {
    out.push_back(disjoint_union(repeat_union(star_graph(3), 3), repeat_union(p3, (n - 12) / 3)));
  }
  return out;
}

std::vector<Graph> build_conjecture_trees(int n) {
  require(n >= 7, "conjectured extremal trees are defined for n >= 7; got n = " + std::to_string(n));
  std::vector<Graph> out;
  if (n % 3 == 1) {
    out.push_back(build_t_star(n));
    return out;
  }
  const int subdivided = n % 3 == 2 ? 1 : 2;
  Builder b;
  const int hub = b.vertex();
  for (int i = 0; i < subdivided; ++i) subdivided_arm(b, hub);
  for (int i = 0; i < (n - 1 - 4 * subdivided) / 3; ++i) plain_arm(b, hub);
  out.push_back(b.build());

  if (n == 14) {
    // Two adjacent hubs, each carrying two plain arms.
    Builder two;
    const int left = two.vertex();
    const int right = two.vertex();
    two.edge(left, right);
    for (int hub_vertex : {left, left, right, right}) plain_arm(two, hub_vertex);
    out.push_back(two.build());
  }
  return out;
}

}  // namespace mds
