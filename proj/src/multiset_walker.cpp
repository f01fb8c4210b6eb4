#include "mds/multiset_walker.hpp"

namespace mds {

MultisetWalker::MultisetWalker(std::span<const int> weights, int max_index, int total)
    : weights_(weights), max_index_(max_index), total_(total), remaining_(total) {}

// Whether `remaining` splits into parts drawn from indices <= bound. Parts
// range over every weight in [weights[0], weights[bound]], so c parts reach
// exactly the interval [c * lo, c * hi].
bool MultisetWalker::feasible(int remaining, int bound) const {
  if (remaining == 0) return true;
  if (bound < 0) return false;
  const int lo = weights_[0];
  const int hi = weights_[bound];
  const int min_parts = (remaining + hi - 1) / hi;
  const int max_parts = remaining / lo;
  return min_parts <= max_parts;
}

int MultisetWalker::best_pick(int remaining, int bound) const {
  for (int i = bound; i >= 0;) {
    const int w = weights_[i];
    if (w <= remaining && feasible(remaining - w, i)) return i;
    // Every index sharing weight w fails the same way; skip the whole run.
    while (i >= 0 && weights_[i] == w) --i;
  }
  return -1;
}

void MultisetWalker::descend(int bound) {
  while (remaining_ > 0) {
    const int pick = best_pick(remaining_, bound);
    picks_.push_back(pick);
    remaining_ -= weights_[pick];
    bound = pick;
  }
}

bool MultisetWalker::next() {
  if (!started_) {
    started_ = true;
    if (!feasible(total_, max_index_)) return false;
    descend(max_index_);
    return true;
  }
  while (!picks_.empty()) {
    const int last = picks_.back();
    picks_.pop_back();
    remaining_ += weights_[last];
    const int alt = best_pick(remaining_, last - 1);
    if (alt >= 0) {
      picks_.push_back(alt);
      remaining_ -= weights_[alt];
      descend(alt);
      return true;
    }
  }
  return false;
}

}  // namespace mds
