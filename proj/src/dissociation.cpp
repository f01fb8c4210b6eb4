#include "mds/dissociation.hpp"

namespace mds {

bool is_dissociation_set(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](int v) {
    if ((g.neighbor_set(v) & s).size() > 1) ok = false;
  });
  return ok;
}

bool is_blocked_everywhere(const Graph& g, VertexSet s) {
  // A vertex u outside s is blocked when it sees two members of s, or one
  // member that already has its own partner in s.
  for (int u = 0; u < g.order(); ++u) {
    if (s.contains(u)) continue;
    const VertexSet seen = g.neighbor_set(u) & s;
    if (seen.size() >= 2) continue;
    if (seen.size() == 1 && !(g.neighbor_set(seen.front()) & s).empty()) continue;
    return false;
  }
  return true;
}

bool is_maximal_dissociation_set(const Graph& g, VertexSet s) {
  return is_dissociation_set(g, s) && is_blocked_everywhere(g, s);
}

}  // namespace mds
