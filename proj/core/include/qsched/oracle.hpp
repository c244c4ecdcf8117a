#pragma once

#include <string>
#include <vector>

#include "qsched/cancel.hpp"
#include "qsched/demand.hpp"
#include "qsched/enumerate.hpp"
#include "qsched/graph.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// A schedule in activation form: each entry activates an independent set of
/// links for a duration.
struct ActivationEntry {
  std::vector<std::string> links;  // sorted link ids
  Rat duration;
};

struct ActivationSchedule {
  std::vector<ActivationEntry> entries;
  Rat total_duration() const;
  /// Total activation time of one link across all entries.
  Rat coverage(const std::string& link) const;
};

struct OracleResult {
  Rat t_star;
  ActivationSchedule schedule;  // attains t_star, covers every demand
  int basis_size = 0;           // entries with positive duration
};

/// Exact minimum schedule duration for the demand vector: the optimum of
///   minimize sum_j t_j  s.t.  sum_{j : l in I_j} t_j >= tau(l),  t >= 0
/// over all maximal independent sets I_j, solved in rational arithmetic.
/// For tau = all-ones this is the fractional chromatic number.
OracleResult minimum_duration(const ConflictGraph& g, const DemandVector& tau,
                              const EnumLimits& limits = {},
                              const CancelToken& cancel = {});

/// True iff minimum_duration(g, tau) <= T.
bool is_feasible(const ConflictGraph& g, const DemandVector& tau, const Rat& T,
                 const EnumLimits& limits = {}, const CancelToken& cancel = {});

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

/// Checks a schedule against a demand vector: every entry independent, every
/// link covered to at least its demand, total duration at most T. Collects
/// human-readable violations instead of throwing.
VerifyResult verify_schedule(const ConflictGraph& g, const DemandVector& tau,
                             const ActivationSchedule& s, const Rat& T);

/// Max of tau(K) over all maximal cliques K; the clique lower bound on
/// minimum_duration. Edgeless graphs give the largest single demand.
Rat t_clique(const ConflictGraph& g, const DemandVector& tau,
             const EnumLimits& limits = {}, const CancelToken& cancel = {});

}  // namespace qsched
