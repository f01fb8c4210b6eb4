#pragma once

#include <vector>

#include "mds/graph.hpp"

namespace mds {

Graph path_graph(int n);

/// K_{1,leaves}, center 0.
Graph star_graph(int leaves);

/// `copies` disjoint copies of g.
Graph repeat_union(const Graph& g, int copies);

/// Hub joined to the centers of (n-1)/3 disjoint P3's. Requires n >= 4,
/// n ≡ 1 (mod 3); throws std::invalid_argument otherwise.
Graph build_t_star(int n);

/// Two K_{1,3}'s with an edge between a leaf of each.
Graph build_t_star_8();

/// Two K_{1,3}'s and a middle vertex adjacent to a leaf of each.
Graph build_t_star_9();

/// The unique forest of order n >= 3 with the most maximal dissociation sets.
Graph build_f1_extremal(int n);

/// The forests of order n >= 7 attaining the second-largest count.
std::vector<Graph> build_f2_extremal(int n);

/// The conjectured extremal trees of order n >= 7: a hub carrying P3 arms,
/// with one (n ≡ 2) or two (n ≡ 0) arms subdivided once between hub and
/// arm center. Order 14 adds the tree of two adjacent hubs, each carrying
/// two P3 arms.
std::vector<Graph> build_conjecture_trees(int n);

}  // namespace mds
