#include "qsched/conditions.hpp"

#include <algorithm>

#include "qsched/errors.hpp"

namespace qsched {

namespace {

void require_inputs(const ConflictGraph& g, const DemandVector& tau,
                    const Rat& T) {
  tau.require_matches(g);
  if (T <= 0) throw DomainError("budget T must be positive");
}

Rat row_lhs(const ConflictGraph& g, const DemandVector& tau, int v) {
  Rat sum = tau.at(g.id_of(v));
  for (int u : g.neighbors_idx(v)) sum += tau.at(g.id_of(u));
  return sum;
}

Rat min_neighbor_demand(const ConflictGraph& g, const DemandVector& tau,
                        int v) {
  const auto& nbrs = g.neighbors_idx(v);
  Rat best = tau.at(g.id_of(nbrs.front()));
  for (std::size_t i = 1; i < nbrs.size(); ++i) {
    const Rat& d = tau.at(g.id_of(nbrs[i]));
    if (d < best) best = d;
  }
  return best;
}

void push_link(Verdict& verdict, const std::string& id, Rat lhs,
               std::string detail = "") {
  LinkCheck check;
  check.lhs = std::move(lhs);
  check.slack = verdict.T - check.lhs;
  check.detail = std::move(detail);
  if (check.slack < 0) verdict.admitted = false;
  verdict.per_link.emplace(id, std::move(check));
}

std::string clique_label(const ConflictGraph& g, const std::vector<int>& clique) {
  std::string label = "clique {";
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (i > 0) label += ", ";
    label += g.id_of(clique[i]);
  }
  label += "}";
  return label;
}

Verdict clique_check(const ConflictGraph& g, const DemandVector& tau,
                     const Rat& T, const Rat& scale, std::string name,
                     const EnumLimits& limits, const CancelToken& cancel) {
  Verdict verdict;
  verdict.condition = std::move(name);
  verdict.T = T;
  if (g.size() == 0) return verdict;

  auto cliques = maximal_cliques(g, limits, cancel);
  // Worst scaled clique sum per link, with the clique that attains it.
  std::vector<Rat> worst(g.size(), Rat(-1));
  std::vector<const std::vector<int>*> worst_clique(g.size(), nullptr);
  for (const auto& clique : cliques) {
    Rat sum = 0;
    for (int v : clique) sum += tau.at(g.id_of(v));
    sum *= scale;
    for (int v : clique) {
      if (worst_clique[v] == nullptr || sum > worst[v]) {
        worst[v] = sum;
        worst_clique[v] = &clique;
      }
    }
  }
  for (int v = 0; v < g.size(); ++v) {
    push_link(verdict, g.id_of(v), worst[v], clique_label(g, *worst_clique[v]));
  }
  return verdict;
}

}  // namespace

Verdict check_row(const ConflictGraph& g, const DemandVector& tau,
                  const Rat& T) {
  require_inputs(g, tau, T);
  Verdict verdict;
  verdict.condition = "row";
  verdict.T = T;
  for (int v = 0; v < g.size(); ++v) {
    push_link(verdict, g.id_of(v), row_lhs(g, tau, v));
  }
  return verdict;
}

Verdict check_row_strengthened_designated(const ConflictGraph& g,
                                          const DemandVector& tau, const Rat& T,
                                          const std::string& designated) {
  require_inputs(g, tau, T);
  if (!g.is_connected()) {
    throw DomainError("designated-link check needs a connected graph");
  }
  int des = g.index_of(designated);
  Verdict verdict;
  verdict.condition = "row-designated";
  verdict.T = T;
  for (int v = 0; v < g.size(); ++v) {
    Rat lhs = row_lhs(g, tau, v);
    std::string detail;
    if (v == des) {
      detail = "designated";
    } else if (g.degree(v) > 0) {
      lhs -= min_neighbor_demand(g, tau, v);
    }
    push_link(verdict, g.id_of(v), std::move(lhs), std::move(detail));
  }
  return verdict;
}

Verdict check_row_strengthened(const ConflictGraph& g, const DemandVector& tau,
                               const Rat& T) {
  require_inputs(g, tau, T);
  if (!g.is_connected()) {
    throw PreconditionError("strengthened row check needs a connected graph");
  }
  if (g.is_complete()) {
    throw PreconditionError(
        "strengthened row check does not apply to complete graphs");
  }
  if (g.is_odd_cycle()) {
    throw PreconditionError(
        "strengthened row check does not apply to odd cycles");
  }
  Verdict verdict;
  verdict.condition = "row-strengthened";
  verdict.T = T;
  for (int v = 0; v < g.size(); ++v) {
    Rat lhs = row_lhs(g, tau, v);
    if (g.degree(v) > 0) lhs -= min_neighbor_demand(g, tau, v);
    push_link(verdict, g.id_of(v), std::move(lhs));
  }
  return verdict;
}

Verdict check_row_strengthened_auto(const ConflictGraph& g,
                                    const DemandVector& tau, const Rat& T,
                                    const std::string& preferred) {
  require_inputs(g, tau, T);
  Verdict verdict;
  verdict.condition = "row-strengthened";
  verdict.T = T;
  for (const auto& component : g.connected_components()) {
    ConflictGraph sub = g.induced(component);
    DemandVector local = tau.restricted(component);
    Verdict part;
    if (!sub.is_complete() && !sub.is_odd_cycle()) {
      part = check_row_strengthened(sub, local, T);
    } else {
      std::string designated = component.count(preferred)
                                   ? preferred
                                   : *component.begin();
      part = check_row_strengthened_designated(sub, local, T, designated);
    }
    if (!part.admitted) verdict.admitted = false;
    for (auto& [id, check] : part.per_link) {
      verdict.per_link.emplace(id, std::move(check));
    }
  }
  return verdict;
}

Verdict check_degree(const ConflictGraph& g, const DemandVector& tau,
                     const Rat& T) {
  require_inputs(g, tau, T);
  Verdict verdict;
  verdict.condition = "degree";
  verdict.T = T;
  for (int v = 0; v < g.size(); ++v) {
    Rat lhs = tau.at(g.id_of(v)) * Rat(g.degree(v) + 1);
    push_link(verdict, g.id_of(v), std::move(lhs));
  }
  return verdict;
}

Verdict check_mixed(const ConflictGraph& g, const DemandVector& tau,
                    const Rat& T) {
  require_inputs(g, tau, T);
  Verdict verdict;
  verdict.condition = "mixed";
  verdict.T = T;
  for (int v = 0; v < g.size(); ++v) {
    Rat row = row_lhs(g, tau, v);
    Rat deg = tau.at(g.id_of(v)) * Rat(g.degree(v) + 1);
    bool use_row = row <= deg;
    push_link(verdict, g.id_of(v), use_row ? std::move(row) : std::move(deg),
              use_row ? "row" : "degree");
  }
  return verdict;
}

Verdict check_clique_necessary(const ConflictGraph& g, const DemandVector& tau,
                               const Rat& T, const EnumLimits& limits,
                               const CancelToken& cancel) {
  require_inputs(g, tau, T);
  return clique_check(g, tau, T, Rat(1), "clique-necessary", limits, cancel);
}

Verdict check_clique_scaled(const ConflictGraph& g, const DemandVector& tau,
                            const Rat& T, const Rat& scale,
                            const EnumLimits& limits,
                            const CancelToken& cancel) {
  require_inputs(g, tau, T);
  if (scale < 1) throw DomainError("clique scale must be at least 1");
  Verdict verdict =
      clique_check(g, tau, T, scale, "clique-scaled", limits, cancel);
  verdict.guarantee_factor = scale;
  return verdict;
}

}  // namespace qsched
