#pragma once

#include <set>
#include <string>
#include <vector>

#include "qsched/cancel.hpp"
#include "qsched/graph.hpp"

namespace qsched {

/// Cap on the vertex count for all exponential enumerations and the LP-based
/// oracles built on them. Exceeding it raises CapacityError, never a silent
/// truncation. Values above 64 are rejected (bitmask representation).
struct EnumLimits {
  int max_vertices = 25;
};

/// All maximal independent sets, each sorted by vertex index, the family
/// ordered lexicographically. Bron-Kerbosch with pivoting.
std::vector<std::vector<int>> maximal_independent_sets(
    const ConflictGraph& g, const EnumLimits& limits = {},
    const CancelToken& cancel = {});

/// All maximal cliques, same determinism guarantees.
std::vector<std::vector<int>> maximal_cliques(const ConflictGraph& g,
                                              const EnumLimits& limits = {},
                                              const CancelToken& cancel = {});

/// Exact independence number by branch and bound.
int independence_number(const ConflictGraph& g, const EnumLimits& limits = {},
                        const CancelToken& cancel = {});

// Identifier-level conveniences.
std::vector<std::set<std::string>> maximal_independent_set_ids(
    const ConflictGraph& g, const EnumLimits& limits = {},
    const CancelToken& cancel = {});
std::vector<std::set<std::string>> maximal_clique_ids(
    const ConflictGraph& g, const EnumLimits& limits = {},
    const CancelToken& cancel = {});

}  // namespace qsched
