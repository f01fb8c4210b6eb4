#pragma once

#include <stdexcept>
#include <vector>

#include "mds/count.hpp"
#include "mds/graph.hpp"

namespace mds {

/// Largest order handled by the subset scan.
inline constexpr int kBruteForceMaxOrder = 24;

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The maximal dissociation sets of a graph, ascending by bitmask.
using MdsList = std::vector<VertexSet>;

/// Every maximal dissociation set of g, found by scanning all 2^n subsets.
/// Throws BudgetError when n exceeds kBruteForceMaxOrder.
MdsList enumerate_mds(const Graph& g);

Count count_mds_brute(const Graph& g);

/// Number of maximal dissociation sets S with include ⊆ S and S ∩ exclude = ∅.
/// Throws std::invalid_argument when include and exclude overlap.
Count count_restricted(const Graph& g, VertexSet include, VertexSet exclude);

}  // namespace mds
