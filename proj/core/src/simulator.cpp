#include "qsched/simulator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "qsched/analysis.hpp"
#include "qsched/errors.hpp"
#include "qsched/line_graph.hpp"
#include "qsched/oracle.hpp"

namespace qsched {

namespace {

enum class Policy {
  row,
  row_strengthened,
  degree,
  mixed,
  clique_scaled,
  clique_network,
  shannon,
};

Policy parse_policy(const std::string& name, bool network) {
  if (name == "row") return Policy::row;
  if (name == "row-strengthened" || name == "row-designated") {
    return Policy::row_strengthened;
  }
  if (name == "degree") return Policy::degree;
  if (name == "mixed") return Policy::mixed;
  if (name == "clique-scaled") return Policy::clique_scaled;
  if (network && name == "clique-network") return Policy::clique_network;
  if (network && name == "shannon") return Policy::shannon;
  throw DomainError("unknown admission policy: " + name);
}

struct LocalCheck {
  Rat lhs;
  int messages = 0;
};

// Judges an arrival from the arriving link's local view: its own demand plus
// whatever its currently active neighbors report.
struct PolicyEngine {
  const ConflictGraph& g;
  const NetworkGraph* net = nullptr;  // network-side policies only
  Policy policy;
  Rat scale = 1;
  const EnumLimits& limits;
  const CancelToken& cancel;

  LocalCheck evaluate(const std::map<std::string, Rat>& active,
                      const std::string& link, const Rat& demand) const {
    switch (policy) {
      case Policy::clique_network:
      case Policy::shannon:
        return evaluate_network(active, link, demand);
      default:
        break;
    }

    std::vector<std::pair<std::string, Rat>> nbrs;
    for (int u : g.neighbors_idx(g.index_of(link))) {
      auto it = active.find(g.id_of(u));
      if (it != active.end()) nbrs.emplace_back(it->first, it->second);
    }
    const int d = static_cast<int>(nbrs.size());
    Rat row = demand;
    for (const auto& [id, load] : nbrs) row += load;

    LocalCheck check;
    check.messages = d;
    switch (policy) {
      case Policy::row:
        check.lhs = row;
        break;
      case Policy::row_strengthened: {
        // The arriving link is never the earliest in its component, so it
        // may always drop its lightest active neighbor.
        check.lhs = row;
        if (d > 0) {
          Rat least = nbrs.front().second;
          for (const auto& [id, load] : nbrs) {
            if (load < least) least = load;
          }
          check.lhs -= least;
        }
        break;
      }
      case Policy::degree:
        check.lhs = demand * Rat(d + 1);
        check.messages = 1;  // one aggregate neighbor-count query
        break;
      case Policy::mixed: {
        Rat deg = demand * Rat(d + 1);
        check.lhs = std::min(row, deg);
        break;
      }
      case Policy::clique_scaled: {
        // Worst clique through the link within the active view.
        std::set<std::string> view;
        view.insert(link);
        for (const auto& [id, load] : nbrs) view.insert(id);
        ConflictGraph sub = g.induced(view);
        Rat worst = demand;
        for (const auto& clique : maximal_clique_ids(sub, limits, cancel)) {
          if (!clique.count(link)) continue;
          Rat sum = demand;
          for (const auto& id : clique) {
            if (id != link) sum += active.at(id);
          }
          if (sum > worst) worst = sum;
        }
        check.lhs = scale * worst;
        break;
      }
      default:
        throw InternalError("policy dispatch out of sync");
    }
    return check;
  }

  LocalCheck evaluate_network(const std::map<std::string, Rat>& active,
                              const std::string& link,
                              const Rat& demand) const {
    // Zero-extend to every network link: absent links weigh nothing, so the
    // full-network loads and triangles judge exactly the active view.
    std::map<std::string, Rat> extended;
    for (const auto& l : net->links()) extended[l.id] = 0;
    for (const auto& [id, load] : active) extended[id] = load;
    extended[link] = demand;
    NodeLoadView view =
        node_load_view(*net, DemandVector::from_map(std::move(extended)));

    const Link& l = net->link(link);
    int sharing = 0;
    for (const auto& [id, load] : active) {
      const Link& other = net->link(id);
      if (other.u == l.u || other.u == l.v || other.v == l.u ||
          other.v == l.v) {
        ++sharing;
      }
    }

    LocalCheck check;
    check.messages = sharing;
    Rat worst = std::max(view.load.at(l.u), view.load.at(l.v));
    if (policy == Policy::shannon) {
      check.lhs = Rat(3) / 2 * worst;
      return check;
    }
    for (const auto& tri : view.triangles) {
      bool has_u = std::find(tri.nodes.begin(), tri.nodes.end(), l.u) !=
                   tri.nodes.end();
      bool has_v = std::find(tri.nodes.begin(), tri.nodes.end(), l.v) !=
                   tri.nodes.end();
      if (!has_u || !has_v) continue;
      bool involves_active = false;
      for (const auto& id : tri.links) {
        if (id != link && active.count(id)) involves_active = true;
      }
      if (involves_active) ++check.messages;
      if (tri.sum > worst) worst = tri.sum;
    }
    check.lhs = Rat(5) / 4 * worst;
    return check;
  }
};

SimTrace run(const ConflictGraph& g, const NetworkGraph* net,
             const Scenario& scenario, const EnumLimits& limits,
             const CancelToken& cancel) {
  if (scenario.T <= 0) throw DomainError("scenario horizon must be positive");
  Policy policy = parse_policy(scenario.policy, net != nullptr);

  Rat scale = 1;
  if (policy == Policy::clique_scaled) {
    scale = scenario.scale ? *scenario.scale
                           : imperfection_ratio(g, limits, cancel).value;
    if (scale < 1) throw DomainError("clique scale must be at least 1");
  }

  std::vector<SimEvent> events = scenario.events;
  for (const auto& e : events) {
    if (!g.contains(e.link)) {
      throw DomainError("unknown link in scenario: " + e.link);
    }
    if (e.t < 0) throw DomainError("event before time zero: " + e.link);
    if (e.kind == SimEvent::Kind::arrival && e.demand < 0) {
      throw DomainError("negative demand for link " + e.link);
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const SimEvent& a, const SimEvent& b) {
                     if (a.t != b.t) return a.t < b.t;
                     if (a.kind != b.kind) {
                       return a.kind == SimEvent::Kind::departure;
                     }
                     return a.link < b.link;
                   });

  PolicyEngine engine{g, net, policy, scale, limits, cancel};

  SimTrace trace;
  trace.T = scenario.T;
  trace.policy = scenario.policy;
  trace.seed = scenario.seed;

  IntervalSchedule sched(scenario.T);
  std::map<std::string, Rat> active;
  for (std::size_t i = 0; i < events.size(); ++i) {
    cancel.check();
    const SimEvent& e = events[i];
    Decision d;
    d.event_index = i;
    d.t = e.t;
    d.link = e.link;

    if (e.kind == SimEvent::Kind::departure) {
      d.kind = "departure";
      d.demand = 0;
      if (active.erase(e.link)) {
        sched.release(e.link);
        d.action = "depart";
      } else {
        d.action = "ignore";
        d.reason = "not-active";
      }
    } else {
      d.kind = "arrival";
      d.demand = e.demand;
      if (active.count(e.link)) {
        d.action = "ignore";
        d.reason = "already-active";
      } else {
        LocalCheck check = engine.evaluate(active, e.link, e.demand);
        d.messages = check.messages;
        if (check.lhs > scenario.T) {
          d.action = "reject";
          d.reason = scenario.policy + " lhs " + rat_to_string(check.lhs) +
                     " exceeds T";
        } else if (free_measure(g, sched, e.link) < e.demand) {
          d.action = "reject";
          d.reason = "no-fit";
        } else {
          sched = first_fit_insert(g, sched, e.link, e.demand);
          active.emplace(e.link, e.demand);
          d.action = "admit";
        }
      }
    }
    trace.decisions.push_back(std::move(d));
  }

  trace.final_schedule = std::move(sched);
  trace.metrics = recompute_metrics(trace, g, limits, cancel);
  return trace;
}

}  // namespace

SimTrace simulate(const ConflictGraph& g, const Scenario& scenario,
                  const EnumLimits& limits, const CancelToken& cancel) {
  parse_policy(scenario.policy, false);  // reject network-only policies early
  return run(g, nullptr, scenario, limits, cancel);
}

SimTrace simulate_network(const NetworkGraph& net, const Scenario& scenario,
                          const EnumLimits& limits, const CancelToken& cancel) {
  ConflictGraph lg = line_conflict_graph(net);
  Policy policy = parse_policy(scenario.policy, true);
  bool network_side =
      policy == Policy::clique_network || policy == Policy::shannon;
  return run(lg, network_side ? &net : nullptr, scenario, limits, cancel);
}

SimMetrics recompute_metrics(const SimTrace& trace, const ConflictGraph& g,
                             const EnumLimits& limits,
                             const CancelToken& cancel) {
  SimMetrics m;
  std::map<std::string, Rat> peak;
  for (const auto& id : g.vertices()) peak[id] = 0;
  for (const auto& d : trace.decisions) {
    m.messages += d.messages;
    if (d.action == "admit") {
      ++m.admitted;
      m.admitted_demand += d.demand;
    } else if (d.action == "reject") {
      ++m.rejected;
    } else if (d.action == "ignore") {
      ++m.ignored;
    }
    if (d.kind == "arrival" && d.demand > peak[d.link]) peak[d.link] = d.demand;
  }
  m.offline_t_star =
      minimum_duration(g, DemandVector::from_map(std::move(peak)), limits,
                       cancel)
          .t_star;
  m.offline_feasible = m.offline_t_star <= trace.T;
  return m;
}

}  // namespace qsched
