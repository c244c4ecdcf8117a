#include "qsched/interval_schedule.hpp"

#include <algorithm>
#include <set>

#include "qsched/conditions.hpp"
#include "qsched/errors.hpp"

namespace qsched {

IntervalSchedule::IntervalSchedule(Rat horizon) : horizon_(std::move(horizon)) {
  if (horizon_ <= 0) throw DomainError("horizon must be positive");
}

bool IntervalSchedule::has(const std::string& link) const {
  return assignments_.find(link) != assignments_.end();
}

Rat IntervalSchedule::assigned_measure(const std::string& link) const {
  auto it = assignments_.find(link);
  return it == assignments_.end() ? Rat(0) : measure(it->second);
}

void IntervalSchedule::assign(const std::string& link,
                              std::vector<Interval> intervals) {
  if (has(link)) throw PreconditionError("link already scheduled: " + link);
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (auto& iv : intervals) {
    if (iv.lo < 0 || iv.hi > horizon_ || iv.lo >= iv.hi) {
      throw DomainError("interval outside [0, horizon) for link " + link);
    }
    if (!merged.empty() && iv.lo < merged.back().hi) {
      throw DomainError("overlapping intervals for link " + link);
    }
    if (!merged.empty() && iv.lo == merged.back().hi) {
      merged.back().hi = std::move(iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  assignments_.emplace(link, std::move(merged));
}

void IntervalSchedule::release(const std::string& link) {
  assignments_.erase(link);
}

Rat measure(const std::vector<Interval>& intervals) {
  Rat total = 0;
  for (const auto& iv : intervals) total += iv.hi - iv.lo;
  return total;
}

std::vector<Interval> neighbor_busy(const ConflictGraph& g,
                                    const IntervalSchedule& sched,
                                    const std::string& link) {
  std::vector<Interval> all;
  for (int u : g.neighbors_idx(g.index_of(link))) {
    auto it = sched.assignments().find(g.id_of(u));
    if (it == sched.assignments().end()) continue;
    all.insert(all.end(), it->second.begin(), it->second.end());
  }
  std::sort(all.begin(), all.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (auto& iv : all) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = std::move(iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  return merged;
}

Rat free_measure(const ConflictGraph& g, const IntervalSchedule& sched,
                 const std::string& link) {
  return sched.horizon() - measure(neighbor_busy(g, sched, link));
}

IntervalSchedule first_fit_insert(const ConflictGraph& g,
                                  const IntervalSchedule& sched,
                                  const std::string& link, const Rat& demand) {
  if (demand < 0) throw DomainError("negative demand for link " + link);
  if (sched.has(link)) {
    throw PreconditionError("link already scheduled: " + link);
  }
  auto busy = neighbor_busy(g, sched, link);

  std::vector<Interval> taken;
  Rat remaining = demand;
  Rat cursor = 0;
  auto claim = [&](const Rat& lo, const Rat& hi) {
    if (remaining == 0 || lo >= hi) return;
    Rat width = hi - lo;
    if (width >= remaining) {
      taken.push_back({lo, lo + remaining});
      remaining = 0;
    } else {
      taken.push_back({lo, hi});
      remaining -= width;
    }
  };
  for (const auto& iv : busy) {
    claim(cursor, iv.lo);
    cursor = iv.hi;
  }
  claim(cursor, sched.horizon());
  if (remaining > 0) {
    throw PreconditionError("insufficient free time for link " + link +
                            ": short by " + rat_to_string(remaining));
  }

  IntervalSchedule next = sched;
  next.assign(link, std::move(taken));
  return next;
}

IntervalSchedule build_schedule_row(const ConflictGraph& g,
                                    const DemandVector& tau, const Rat& T,
                                    const std::vector<std::string>& order) {
  std::vector<std::string> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.vertices()) {
    throw DomainError("insertion order must permute the graph's links");
  }
  Verdict row = check_row(g, tau, T);
  if (!row.admitted) {
    for (const auto& [id, check] : row.per_link) {
      if (check.slack < 0) {
        throw PreconditionError("row constraint fails at link " + id +
                                ": lhs " + rat_to_string(check.lhs));
      }
    }
  }
  IntervalSchedule sched(T);
  for (const auto& id : order) {
    sched = first_fit_insert(g, sched, id, tau.at(id));
  }
  return sched;
}

ActivationSchedule to_activation(const IntervalSchedule& sched,
                                 const ConflictGraph& g) {
  // Validate conflict-disjointness before slicing: every edge's two interval
  // lists must not overlap.
  for (const auto& entry : sched.assignments()) {
    if (!g.contains(entry.first)) {
      throw DomainError("scheduled link not in the conflict graph: " +
                        entry.first);
    }
  }
  for (const auto& [id, intervals] : sched.assignments()) {
    int v = g.index_of(id);
    for (int u : g.neighbors_idx(v)) {
      if (u < v) continue;  // each edge once
      auto it = sched.assignments().find(g.id_of(u));
      if (it == sched.assignments().end()) continue;
      const auto& a = intervals;
      const auto& b = it->second;
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i].hi <= b[j].lo) {
          ++i;
        } else if (b[j].hi <= a[i].lo) {
          ++j;
        } else {
          throw DomainError("conflicting links " + id + " and " + g.id_of(u) +
                            " overlap in time");
        }
      }
    }
  }

  std::set<Rat> points;
  for (const auto& [id, intervals] : sched.assignments()) {
    (void)id;
    for (const auto& iv : intervals) {
      points.insert(iv.lo);
      points.insert(iv.hi);
    }
  }

  ActivationSchedule result;
  if (points.empty()) return result;
  std::vector<Rat> cuts(points.begin(), points.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat& lo = cuts[i];
    std::vector<std::string> active;
    for (const auto& [id, intervals] : sched.assignments()) {
      for (const auto& iv : intervals) {
        if (iv.lo <= lo && lo < iv.hi) {
          active.push_back(id);
          break;
        }
      }
    }
    if (active.empty()) continue;
    Rat width = cuts[i + 1] - lo;
    if (!result.entries.empty() && result.entries.back().links == active) {
      result.entries.back().duration += width;
    } else {
      ActivationEntry entry;
      entry.links = std::move(active);
      entry.duration = std::move(width);
      result.entries.push_back(std::move(entry));
    }
  }
  return result;
}

}  // namespace qsched
