#include "qsched/oracle.hpp"

#include <algorithm>
#include <map>

#include "qsched/errors.hpp"
#include "qsched/lp.hpp"

namespace qsched {

Rat ActivationSchedule::total_duration() const {
  Rat total = 0;
  for (const auto& e : entries) total += e.duration;
  return total;
}

Rat ActivationSchedule::coverage(const std::string& link) const {
  Rat total = 0;
  for (const auto& e : entries) {
    if (std::binary_search(e.links.begin(), e.links.end(), link)) {
      total += e.duration;
    }
  }
  return total;
}

OracleResult minimum_duration(const ConflictGraph& g, const DemandVector& tau,
                              const EnumLimits& limits,
                              const CancelToken& cancel) {
  tau.require_matches(g);
  OracleResult result;
  result.t_star = 0;
  if (g.size() == 0) return result;

  auto sets = maximal_independent_sets(g, limits, cancel);

  LinearProgram lp;
  for (std::size_t j = 0; j < sets.size(); ++j) lp.add_var(Rat(1));
  for (int v = 0; v < g.size(); ++v) {
    const Rat& demand = tau.at(g.id_of(v));
    if (demand == 0) continue;
    LinearProgram::Row row;
    row.rel = LinearProgram::Rel::ge;
    row.rhs = demand;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (std::binary_search(sets[j].begin(), sets[j].end(), v)) {
        row.coeffs.emplace_back(static_cast<int>(j), Rat(1));
      }
    }
    lp.add_row(std::move(row));
  }

  auto sol = solve_lp(lp, cancel);
  if (sol.status != LpSolution::Status::optimal) {
    throw InternalError("covering LP must have an optimum");
  }

  result.t_star = sol.value;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (sol.x[j] == 0) continue;
    ActivationEntry entry;
    for (int v : sets[j]) entry.links.push_back(g.id_of(v));
    entry.duration = sol.x[j];
    result.schedule.entries.push_back(std::move(entry));
  }
  result.basis_size = static_cast<int>(result.schedule.entries.size());
  return result;
}

bool is_feasible(const ConflictGraph& g, const DemandVector& tau, const Rat& T,
                 const EnumLimits& limits, const CancelToken& cancel) {
  return minimum_duration(g, tau, limits, cancel).t_star <= T;
}

VerifyResult verify_schedule(const ConflictGraph& g, const DemandVector& tau,
                             const ActivationSchedule& s, const Rat& T) {
  VerifyResult res;
  auto fail = [&res](std::string msg) {
    res.ok = false;
    res.violations.push_back(std::move(msg));
  };

  for (const auto& e : s.entries) {
    if (e.duration < 0) {
      fail("negative duration in activation entry");
    }
    std::vector<int> idx;
    bool known = true;
    for (const auto& id : e.links) {
      if (!g.contains(id)) {
        fail("unknown link in activation set: " + id);
        known = false;
      }
    }
    if (!known) continue;
    for (const auto& id : e.links) idx.push_back(g.index_of(id));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) {
          fail("repeated link in activation set: " + e.links[a]);
        } else if (g.adjacent(idx[a], idx[b])) {
          fail("non-independent activation set: " + g.id_of(idx[a]) + " conflicts with " +
               g.id_of(idx[b]));
        }
      }
    }
  }

  for (const auto& [link, demand] : tau.demands()) {
    Rat covered = s.coverage(link);
    if (covered < demand) {
      fail("unmet demand for " + link + ": covered " + rat_to_string(covered) +
           " of " + rat_to_string(demand));
    }
  }

  Rat total = s.total_duration();
  if (total > T) {
    fail("total duration " + rat_to_string(total) + " exceeds " +
         rat_to_string(T));
  }
  return res;
}

Rat t_clique(const ConflictGraph& g, const DemandVector& tau,
             const EnumLimits& limits, const CancelToken& cancel) {
  tau.require_matches(g);
  if (g.size() == 0) return 0;
  Rat best = 0;
  for (const auto& clique : maximal_cliques(g, limits, cancel)) {
    Rat sum = 0;
    for (int v : clique) sum += tau.at(g.id_of(v));
    if (sum > best) best = sum;
  }
  return best;
}

}  // namespace qsched
