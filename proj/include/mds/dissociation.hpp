#pragma once

#include "mds/graph.hpp"

namespace mds {

/// True iff every vertex of `s` has at most one neighbor inside `s`.
bool is_dissociation_set(const Graph& g, VertexSet s);

/// True iff no vertex outside `s` can be added while keeping `s` a
/// dissociation set. Does not check that `s` itself is one.
bool is_blocked_everywhere(const Graph& g, VertexSet s);

bool is_maximal_dissociation_set(const Graph& g, VertexSet s);

}  // namespace mds
