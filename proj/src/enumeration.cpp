#include "mds/enumeration.hpp"

#include <string>

#include "mds/dissociation.hpp"

namespace mds {

namespace {

void check_budget(const Graph& g) {
  if (g.order() > kBruteForceMaxOrder)
    throw BudgetError("subset enumeration is limited to n <= " + std::to_string(kBruteForceMaxOrder) + " (got n = " +
                      std::to_string(g.order()) + "); use the tree DP for forests");
}

// Visits include | sub for every sub ⊆ free, in ascending bitmask order.
template <typename F>
void scan(const Graph& g, VertexSet include, VertexSet free, F&& visit) {
  const std::uint64_t mask = free.bits();
  std::uint64_t sub = 0;
  do {
    const VertexSet s = include | VertexSet(sub);
    if (is_maximal_dissociation_set(g, s)) visit(s);
    sub = (sub - mask) & mask;
  } while (sub != 0);
}

}  // namespace

MdsList enumerate_mds(const Graph& g) {
  check_budget(g);
  MdsList out;
  scan(g, VertexSet{}, g.vertices(), [&](VertexSet s) { out.push_back(s); });
  return out;
}

Count count_mds_brute(const Graph& g) { return count_restricted(g, VertexSet{}, VertexSet{}); }

Count count_restricted(const Graph& g, VertexSet include, VertexSet exclude) {
  if (!include.disjoint(exclude)) throw std::invalid_argument("include and exclude sets overlap");
  if (!(include | exclude).subset_of(g.vertices()))
    throw std::invalid_argument("restriction sets reference vertices outside the graph");
  check_budget(g);
  Count total = 0;
  scan(g, include, g.vertices() - include - exclude, [&](VertexSet) { ++total; });
  return total;
}

}  // namespace mds
