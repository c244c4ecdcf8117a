#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qsched/cancel.hpp"
#include "qsched/demand.hpp"
#include "qsched/enumerate.hpp"
#include "qsched/graph.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// Worst-case characterization of the localized admission conditions on one
/// conflict graph. beta values are worst-case ratios between what a
/// condition admits and what is actually feasible; sigma is the induced star
/// number, the exact factor for the row constraints.
struct PerformanceReport {
  int sigma = 0;
  int delta_plus_one = 1;
  Rat beta_row = 1;
  Rat beta_degree = 1;
  std::pair<Rat, Rat> beta_mixed_bounds{1, 1};
  std::optional<Rat> beta_mixed_exact;  // when every neighborhood is a
                                        // disjoint union of cliques
  std::map<std::string, int> eta;  // vertex -> neighborhood component count
};

/// max over vertices v of the independence number of the subgraph induced by
/// v's neighborhood; 0 when the graph has no edges.
int induced_star_number(const ConflictGraph& g, const EnumLimits& limits = {},
                        const CancelToken& cancel = {});

/// A worst-case value plus a demand vector inside the feasibility polytope
/// (a convex combination of independent sets) attaining it.
struct BetaResult {
  Rat value;
  DemandVector witness;
};

/// sup over feasible demands of the worst row sum tau(l) + tau(Gamma(l)).
/// Equals max(1, induced star number).
BetaResult beta_row_lp(const ConflictGraph& g, const EnumLimits& limits = {},
                       const CancelToken& cancel = {});

/// sup over feasible demands of the worst degree product tau(l)(d(l)+1).
/// Equals the maximum degree plus one.
BetaResult beta_degree_lp(const ConflictGraph& g, const EnumLimits& limits = {},
                          const CancelToken& cancel = {});

/// sup over feasible demands of the worst per-link min(row, degree) value,
/// solved exactly as one small LP per vertex.
BetaResult beta_mixed_lp(const ConflictGraph& g, const EnumLimits& limits = {},
                         const CancelToken& cancel = {});

/// sup over feasible demands of the worst min-subtracted row sum; lands on
/// the induced star number or one below it.
BetaResult beta_row_strengthened_lp(const ConflictGraph& g,
                                    const EnumLimits& limits = {},
                                    const CancelToken& cancel = {});

/// True iff every vertex's neighborhood induces a disjoint union of
/// complete graphs.
bool mixed_formula_applies(const ConflictGraph& g);

/// Number of connected components induced by each vertex's neighborhood.
std::map<std::string, int> neighborhood_components(const ConflictGraph& g);

/// Exact beta_mixed via the closed formula max_l eta(1+d)/(eta+d); requires
/// mixed_formula_applies (throws PreconditionError naming a violating
/// vertex otherwise). Isolated vertices contribute 1.
Rat beta_mixed_formula(const ConflictGraph& g);

struct ImperfectionResult {
  Rat value;
  DemandVector witness;  // demand attaining t_star / t_clique = value
};

/// Exact imperfection ratio: sup over nonzero demands of t_star / t_clique,
/// computed over the clique polytope's vertices and cross-checked against
/// seeded random sampling (a discrepancy raises InternalError).
ImperfectionResult imperfection_ratio(const ConflictGraph& g,
                                      const EnumLimits& limits = {},
                                      const CancelToken& cancel = {});

/// Full report; enforces the internal consistency relations between the
/// fields and throws InternalError on any mismatch.
PerformanceReport report(const ConflictGraph& g, const EnumLimits& limits = {},
                         const CancelToken& cancel = {});

}  // namespace qsched
