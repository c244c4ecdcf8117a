#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsched/demand.hpp"
#include "qsched/graph.hpp"
#include "qsched/oracle.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// Half-open interval [lo, hi) within the scheduling horizon.
struct Interval {
  Rat lo;
  Rat hi;
};

/// Per-link fractional time assignments over [0, T). Conflicting links must
/// hold disjoint time; non-conflicting links may overlap freely. Value type:
/// the scheduler hands out updated copies.
class IntervalSchedule {
 public:
  IntervalSchedule() = default;
  explicit IntervalSchedule(Rat horizon);

  const Rat& horizon() const { return horizon_; }
  const std::map<std::string, std::vector<Interval>>& assignments() const {
    return assignments_;
  }
  bool has(const std::string& link) const;
  Rat assigned_measure(const std::string& link) const;

  /// Installs the link's intervals: sorted, merged, validated against the
  /// horizon. Replacing an existing assignment is an error; release first.
  void assign(const std::string& link, std::vector<Interval> intervals);
  void release(const std::string& link);

 private:
  Rat horizon_ = 0;
  std::map<std::string, std::vector<Interval>> assignments_;
};

/// Total length of a disjoint interval list.
Rat measure(const std::vector<Interval>& intervals);

/// Union of the schedules of the link's conflict-graph neighbors, as a
/// sorted disjoint interval list.
std::vector<Interval> neighbor_busy(const ConflictGraph& g,
                                    const IntervalSchedule& sched,
                                    const std::string& link);

/// Time still open to the link: the horizon minus its neighbors' busy time.
Rat free_measure(const ConflictGraph& g, const IntervalSchedule& sched,
                 const std::string& link);

/// Gives the link the earliest free time of total length exactly `demand`,
/// split across the gaps its neighbors leave. Throws PreconditionError when
/// the free time falls short or the link is already scheduled.
IntervalSchedule first_fit_insert(const ConflictGraph& g,
                                  const IntervalSchedule& sched,
                                  const std::string& link, const Rat& demand);

/// Builds a complete schedule by first-fit insertion in the given order
/// (a permutation of the vertices). Requires the row constraints to hold at
/// T, which guarantees every insertion fits.
IntervalSchedule build_schedule_row(const ConflictGraph& g,
                                    const DemandVector& tau, const Rat& T,
                                    const std::vector<std::string>& order);

/// Slices [0, T) at interval endpoints and emits each slice's active set;
/// idle slices are dropped and adjacent identical slices merge. Validates
/// the schedule (conflict-disjointness included) first.
ActivationSchedule to_activation(const IntervalSchedule& sched,
                                 const ConflictGraph& g);

}  // namespace qsched
