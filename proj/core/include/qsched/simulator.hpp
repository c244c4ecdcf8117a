#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsched/cancel.hpp"
#include "qsched/demand.hpp"
#include "qsched/enumerate.hpp"
#include "qsched/graph.hpp"
#include "qsched/interval_schedule.hpp"
#include "qsched/rational.hpp"

namespace qsched {

struct SimEvent {
  enum class Kind { arrival, departure };
  Rat t;
  Kind kind = Kind::arrival;
  std::string link;
  Rat demand = 0;  // arrivals only
};

struct Scenario {
  Rat T = 1;
  std::string policy;
  std::optional<Rat> scale;  // clique-scaled only; defaults to the graph's
                             // imperfection ratio
  std::uint64_t seed = 0;    // recorded in the trace; the loop itself is
                             // deterministic
  std::vector<SimEvent> events;
};

struct Decision {
  std::size_t event_index = 0;
  Rat t;
  std::string kind;    // "arrival" | "departure"
  std::string link;
  Rat demand;          // the event's demand (zero for departures)
  std::string action;  // "admit" | "reject" | "depart" | "ignore"
  std::string reason;  // rejection rule or ignore cause; empty otherwise
  int messages = 0;
};

struct SimMetrics {
  int admitted = 0;
  int rejected = 0;
  int ignored = 0;
  long messages = 0;
  Rat admitted_demand = 0;  // summed over admit decisions
  Rat offline_t_star = 0;   // oracle optimum on the per-link peak demands
  bool offline_feasible = false;
};

struct SimTrace {
  Rat T;
  std::string policy;
  std::uint64_t seed = 0;
  std::vector<Decision> decisions;
  IntervalSchedule final_schedule;
  SimMetrics metrics;
};

/// Deterministic online admission over a conflict graph. Each arrival is
/// judged by the policy on the arriving link's local view (its demand plus
/// the currently active neighbors), then placed by first-fit insertion; a
/// placement failure rejects with reason "no-fit". Departures free their
/// intervals immediately. Policies: row, row-strengthened (the designated
/// variant, earliest active link per component designated), degree, mixed,
/// clique-scaled.
SimTrace simulate(const ConflictGraph& g, const Scenario& scenario,
                  const EnumLimits& limits = {},
                  const CancelToken& cancel = {});

/// Same loop over a network under primary interference; adds the
/// network-side policies clique-network and shannon.
SimTrace simulate_network(const NetworkGraph& net, const Scenario& scenario,
                          const EnumLimits& limits = {},
                          const CancelToken& cancel = {});

/// Recomputes the metrics from the decision list and the graph; simulate's
/// own metrics must round-trip through this exactly.
SimMetrics recompute_metrics(const SimTrace& trace, const ConflictGraph& g,
                             const EnumLimits& limits = {},
                             const CancelToken& cancel = {});

}  // namespace qsched
