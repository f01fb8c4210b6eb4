#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mds/graph.hpp"

namespace mds {

/// Isomorphism-invariant code of a forest: per-component AHU strings over
/// '(' and ')', sorted and concatenated. Each component code is balanced,
/// so the concatenation parses back into the same multiset.
class CanonicalForestCode {
 public:
  CanonicalForestCode() = default;
  explicit CanonicalForestCode(std::string code) : code_(std::move(code)) {}

  const std::string& str() const { return code_; }

  friend bool operator==(const CanonicalForestCode&, const CanonicalForestCode&) = default;
  friend auto operator<=>(const CanonicalForestCode&, const CanonicalForestCode&) = default;

 private:
  std::string code_;
};

/// AHU code of the tree containing `root`, rooted there.
std::string rooted_code(const Graph& g, int root);

/// One vertex, or two adjacent vertices, for the tree containing `v`.
std::vector<int> tree_centers(const Graph& g, int v);

/// Throws GraphError if `g` contains a cycle.
CanonicalForestCode canonical_code(const Graph& g);

}  // namespace mds
