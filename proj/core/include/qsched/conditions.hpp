#pragma once

#include <map>
#include <optional>
#include <string>

#include "qsched/cancel.hpp"
#include "qsched/demand.hpp"
#include "qsched/enumerate.hpp"
#include "qsched/graph.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// Uniform reporting envelope for all admission checks. "admitted" means
/// every per-link slack is nonnegative; for the necessary-only clique check
/// it reads as "not refuted".
struct LinkCheck {
  Rat lhs;
  Rat slack;           // T - lhs
  std::string detail;  // optional: which rule / clique produced the lhs
};

struct Verdict {
  bool admitted = true;
  std::string condition;
  Rat T;
  std::map<std::string, LinkCheck> per_link;
  std::optional<Rat> guarantee_factor;  // worst-case factor, when attached
};

/// Row constraints: per link, tau(l) + tau(Gamma(l)) <= T. Sufficient.
Verdict check_row(const ConflictGraph& g, const DemandVector& tau, const Rat& T);

/// Strengthened row constraints with one designated link keeping the full
/// row sum; every other link subtracts its smallest neighbor demand.
/// Requires a connected graph (apply per component) and a known designated
/// link. Sufficient.
Verdict check_row_strengthened_designated(const ConflictGraph& g,
                                          const DemandVector& tau, const Rat& T,
                                          const std::string& designated);

/// Strengthened row constraints with the subtraction applied at every link.
/// Sufficient only when the graph is connected and neither complete nor an
/// odd cycle; other inputs raise PreconditionError (use the designated
/// variant or the auto wrapper there).
Verdict check_row_strengthened(const ConflictGraph& g, const DemandVector& tau,
                               const Rat& T);

/// Per-component wrapper: applies check_row_strengthened where its
/// hypotheses hold and falls back to the designated variant (smallest link
/// id designated, or `preferred` when it lies in the component) elsewhere.
Verdict check_row_strengthened_auto(const ConflictGraph& g,
                                    const DemandVector& tau, const Rat& T,
                                    const std::string& preferred = "");

/// Degree condition: per link, tau(l) * (d(l) + 1) <= T. Sufficient.
Verdict check_degree(const ConflictGraph& g, const DemandVector& tau,
                     const Rat& T);

/// Mixed condition: per link, min(row lhs, degree lhs) <= T. Sufficient and
/// weaker than both row and degree alone.
Verdict check_mixed(const ConflictGraph& g, const DemandVector& tau,
                    const Rat& T);

/// Clique constraints: tau(K) <= T for every maximal clique K. Necessary but
/// not sufficient; a rejection proves infeasibility. Per link the verdict
/// reports the worst clique containing it.
Verdict check_clique_necessary(const ConflictGraph& g, const DemandVector& tau,
                               const Rat& T, const EnumLimits& limits = {},
                               const CancelToken& cancel = {});

/// Scaled clique constraints: scale * tau(K) <= T for every maximal clique.
/// With scale at least the graph's imperfection ratio this is sufficient.
/// scale must be >= 1.
Verdict check_clique_scaled(const ConflictGraph& g, const DemandVector& tau,
                            const Rat& T, const Rat& scale,
                            const EnumLimits& limits = {},
                            const CancelToken& cancel = {});

}  // namespace qsched
