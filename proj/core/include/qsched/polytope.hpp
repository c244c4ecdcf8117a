#pragma once

#include <vector>

#include "qsched/cancel.hpp"
#include "qsched/enumerate.hpp"
#include "qsched/graph.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// All vertices of the clique polytope
///   { x >= 0 : x(K) <= 1 for every maximal clique K }
/// as coordinate vectors in the graph's vertex order, sorted
/// lexicographically. Exact rational double-description; desk scale only
/// (CapacityError beyond the limits or when the vertex set explodes).
std::vector<std::vector<Rat>> clique_polytope_vertices(
    const ConflictGraph& g, const EnumLimits& limits = {},
    const CancelToken& cancel = {});

}  // namespace qsched
