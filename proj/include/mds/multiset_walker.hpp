#pragma once

#include <span>
#include <vector>

namespace mds {

/// Enumerates multisets of catalog items whose weights sum to a target.
///
/// Items are indices into a weight table sorted ascending, whose distinct
/// weights form a contiguous integer range. A multiset is reported as a
/// non-increasing index sequence; sequences come out in decreasing
/// lexicographic order, so each multiset appears exactly once.
class MultisetWalker {
 public:
  /// Only indices <= max_index are used; max_index < 0 allows none.
  MultisetWalker(std::span<const int> weights, int max_index, int total);

  /// Moves to the next multiset; false once exhausted.
  bool next();

  std::span<const int> picks() const { return picks_; }

 private:
  bool feasible(int remaining, int bound) const;
  int best_pick(int remaining, int bound) const;
  void descend(int bound);

  std::span<const int> weights_;
  int max_index_;
  int total_;
  int remaining_;
  bool started_ = false;
  std::vector<int> picks_;
};

}  // namespace mds
