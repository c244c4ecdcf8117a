#include "qsched/analysis.hpp"

#include <algorithm>
#include <vector>

#include "qsched/errors.hpp"
#include "qsched/lp.hpp"
#include "qsched/polytope.hpp"
#include "qsched/random.hpp"

namespace qsched {

namespace {

ConflictGraph neighborhood_subgraph(const ConflictGraph& g, int v) {
  return g.induced_idx(g.neighbors_idx(v));
}

DemandVector indicator_demands(const ConflictGraph& g,
                               const std::vector<int>& set) {
  std::map<std::string, Rat> demands;
  for (const auto& id : g.vertices()) demands[id] = 0;
  for (int v : set) demands[g.id_of(v)] = 1;
  return DemandVector::from_map(std::move(demands));
}

}  // namespace

int induced_star_number(const ConflictGraph& g, const EnumLimits& limits,
                        const CancelToken& cancel) {
  int best = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) continue;
    int alpha = independence_number(neighborhood_subgraph(g, v), limits, cancel);
    best = std::max(best, alpha);
  }
  return best;
}

BetaResult beta_row_lp(const ConflictGraph& g, const EnumLimits& limits,
                       const CancelToken& cancel) {
  if (g.size() == 0) return {Rat(1), DemandVector{}};
  auto sets = maximal_independent_sets(g, limits, cancel);
  // The functional is linear with 0/1 coefficients, so its sup over the
  // feasibility polytope sits at an independent-set vertex: count the
  // closed-neighborhood overlap instead of solving an LP.
  Rat best = 0;
  const std::vector<int>* best_set = nullptr;
  for (int v = 0; v < g.size(); ++v) {
    for (const auto& set : sets) {
      int overlap = std::binary_search(set.begin(), set.end(), v) ? 1 : 0;
      for (int u : g.neighbors_idx(v)) {
        if (std::binary_search(set.begin(), set.end(), u)) ++overlap;
      }
      if (Rat(overlap) > best) {
        best = overlap;
        best_set = &set;
      }
    }
  }
  return {best, indicator_demands(g, *best_set)};
}

BetaResult beta_degree_lp(const ConflictGraph& g, const EnumLimits& limits,
                          const CancelToken& cancel) {
  if (g.size() == 0) return {Rat(1), DemandVector{}};
  auto sets = maximal_independent_sets(g, limits, cancel);
  Rat best = 0;
  const std::vector<int>* best_set = nullptr;
  for (const auto& set : sets) {
    for (int v : set) {
      Rat value = g.degree(v) + 1;
      if (value > best) {
        best = value;
        best_set = &set;
      }
    }
  }
  return {best, indicator_demands(g, *best_set)};
}

BetaResult beta_mixed_lp(const ConflictGraph& g, const EnumLimits& limits,
                         const CancelToken& cancel) {
  if (g.size() == 0) return {Rat(1), DemandVector{}};
  auto sets = maximal_independent_sets(g, limits, cancel);
  const int m = static_cast<int>(sets.size());

  Rat best = -1;
  std::vector<Rat> best_lambda;
  for (int v = 0; v < g.size(); ++v) {
    cancel.check();
    // Over tau = sum_j lambda_j * (independent set j), maximize
    //   z <= sum_j overlap_j lambda_j          (row value at v)
    //   z <= (d(v)+1) sum_j member_j lambda_j  (degree value at v)
    // with lambda a convex combination. Variables: z, lambda_1..m.
    LinearProgram lp;
    lp.add_var(Rat(-1));  // minimize -z
    for (int j = 0; j < m; ++j) lp.add_var(Rat(0));

    LinearProgram::Row row_cap;
    row_cap.rel = LinearProgram::Rel::le;
    row_cap.rhs = 0;
    row_cap.coeffs.emplace_back(0, Rat(1));
    LinearProgram::Row deg_cap = row_cap;
    for (int j = 0; j < m; ++j) {
      int overlap = std::binary_search(sets[j].begin(), sets[j].end(), v) ? 1 : 0;
      for (int u : g.neighbors_idx(v)) {
        if (std::binary_search(sets[j].begin(), sets[j].end(), u)) ++overlap;
      }
      if (overlap > 0) row_cap.coeffs.emplace_back(1 + j, Rat(-overlap));
      if (std::binary_search(sets[j].begin(), sets[j].end(), v)) {
        deg_cap.coeffs.emplace_back(1 + j, Rat(-(g.degree(v) + 1)));
      }
    }
    LinearProgram::Row convex;
    convex.rel = LinearProgram::Rel::eq;
    convex.rhs = 1;
    for (int j = 0; j < m; ++j) convex.coeffs.emplace_back(1 + j, Rat(1));

    lp.add_row(std::move(row_cap));
    lp.add_row(std::move(deg_cap));
    lp.add_row(std::move(convex));

    auto sol = solve_lp(lp, cancel);
    if (sol.status != LpSolution::Status::optimal) {
      throw InternalError("per-vertex mixed LP must be bounded and feasible");
    }
    Rat value = -sol.value;
    if (value > best) {
      best = value;
      best_lambda.assign(sol.x.begin() + 1, sol.x.end());
    }
  }

  std::map<std::string, Rat> witness;
  for (const auto& id : g.vertices()) witness[id] = 0;
  for (int j = 0; j < m; ++j) {
    if (best_lambda[j] == 0) continue;
    for (int v : sets[j]) witness[g.id_of(v)] += best_lambda[j];
  }
  return {best, DemandVector::from_map(std::move(witness))};
}

BetaResult beta_row_strengthened_lp(const ConflictGraph& g,
                                    const EnumLimits& limits,
                                    const CancelToken& cancel) {
  if (g.size() == 0) return {Rat(1), DemandVector{}};
  auto sets = maximal_independent_sets(g, limits, cancel);
  // The min-subtracted row value at v equals the max over neighbors u of the
  // linear functional tau(N[v]) - tau(u), so the sup is a max over pairs and
  // independent sets. Isolated vertices keep the plain row value tau(v).
  Rat best = 0;
  const std::vector<int>* best_set = nullptr;
  for (int v = 0; v < g.size(); ++v) {
    for (const auto& set : sets) {
      int overlap = std::binary_search(set.begin(), set.end(), v) ? 1 : 0;
      for (int u : g.neighbors_idx(v)) {
        if (std::binary_search(set.begin(), set.end(), u)) ++overlap;
      }
      if (g.degree(v) == 0) {
        if (Rat(overlap) > best) {
          best = overlap;
          best_set = &set;
        }
        continue;
      }
      for (int u : g.neighbors_idx(v)) {
        int member = std::binary_search(set.begin(), set.end(), u) ? 1 : 0;
        if (Rat(overlap - member) > best) {
          best = overlap - member;
          best_set = &set;
        }
      }
    }
  }
  return {best, indicator_demands(g, *best_set)};
}

bool mixed_formula_applies(const ConflictGraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    ConflictGraph nbhd = neighborhood_subgraph(g, v);
    for (const auto& component : nbhd.connected_components()) {
      if (!nbhd.induced(component).is_complete()) return false;
    }
  }
  return true;
}

std::map<std::string, int> neighborhood_components(const ConflictGraph& g) {
  std::map<std::string, int> eta;
  for (int v = 0; v < g.size(); ++v) {
    eta[g.id_of(v)] =
        static_cast<int>(neighborhood_subgraph(g, v).components_idx().size());
  }
  return eta;
}

Rat beta_mixed_formula(const ConflictGraph& g) {
  Rat best = 1;
  for (int v = 0; v < g.size(); ++v) {
    ConflictGraph nbhd = neighborhood_subgraph(g, v);
    for (const auto& component : nbhd.connected_components()) {
      if (!nbhd.induced(component).is_complete()) {
        throw PreconditionError("neighborhood of " + g.id_of(v) +
                                " is not a disjoint union of cliques");
      }
    }
    int d = g.degree(v);
    if (d == 0) continue;  // isolated vertices contribute 1
    int eta = static_cast<int>(nbhd.components_idx().size());
    Rat value = Rat(eta * (1 + d)) / Rat(eta + d);
    if (value > best) best = value;
  }
  return best;
}

namespace {

// Minimum schedule duration for a coordinate demand vector, over an already
// enumerated family of maximal independent sets.
Rat cover_duration(const std::vector<std::vector<int>>& sets,
                   const std::vector<Rat>& x, const CancelToken& cancel) {
  LinearProgram lp;
  for (std::size_t j = 0; j < sets.size(); ++j) lp.add_var(Rat(1));
  for (int v = 0; v < static_cast<int>(x.size()); ++v) {
    if (x[v] == 0) continue;
    LinearProgram::Row row;
    row.rel = LinearProgram::Rel::ge;
    row.rhs = x[v];
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
  return sol.value;
}

Rat max_clique_sum(const std::vector<std::vector<int>>& cliques,
                   const std::vector<Rat>& x) {
  Rat best = 0;
  for (const auto& clique : cliques) {
    Rat sum = 0;
    for (int v : clique) sum += x[v];
    if (sum > best) best = sum;
  }
  return best;
}

}  // namespace

ImperfectionResult imperfection_ratio(const ConflictGraph& g,
                                      const EnumLimits& limits,
                                      const CancelToken& cancel) {
  if (g.size() == 0) return {Rat(1), DemandVector{}};

  auto sets = maximal_independent_sets(g, limits, cancel);
  auto cliques = maximal_cliques(g, limits, cancel);
  auto verts = clique_polytope_vertices(g, limits, cancel);

  Rat best = 0;
  const std::vector<Rat>* best_x = nullptr;
  for (const auto& x : verts) {
    cancel.check();
    // Every nonzero polytope vertex has clique maximum exactly 1, so the
    // ratio reduces to the covering optimum; dividing keeps it robust.
    Rat clique = max_clique_sum(cliques, x);
    if (clique == 0) continue;
    Rat ratio = cover_duration(sets, x, cancel) / clique;
    if (ratio > best) {
      best = ratio;
      best_x = &x;
    }
  }
  if (best < 1 || best_x == nullptr) {
    throw InternalError("imperfection ratio below one");
  }
  std::map<std::string, Rat> demands;
  for (int v = 0; v < g.size(); ++v) demands[g.id_of(v)] = (*best_x)[v];
  DemandVector witness = DemandVector::from_map(std::move(demands));

  // Seeded sampling can only discover lower bounds; a sample beating the
  // polytope maximum means the vertex enumeration is wrong.
  SplitMix64 rng(0x1d0b5eed2024ull);
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<Rat> x(g.size());
    for (auto& c : x) c = Rat(static_cast<long>(rng.below(9))) / 8;
    Rat clique = max_clique_sum(cliques, x);
    if (clique == 0) continue;
    Rat ratio = cover_duration(sets, x, cancel) / clique;
    if (ratio > best) {
      throw InternalError("sampled demand beats the clique polytope maximum");
    }
  }
  return {best, witness};
}

PerformanceReport report(const ConflictGraph& g, const EnumLimits& limits,
                         const CancelToken& cancel) {
  PerformanceReport rep;
  rep.sigma = induced_star_number(g, limits, cancel);
  rep.delta_plus_one = g.max_degree() + 1;
  rep.beta_row = beta_row_lp(g, limits, cancel).value;
  rep.beta_degree = beta_degree_lp(g, limits, cancel).value;
  if (rep.sigma >= 1) {
    rep.beta_mixed_bounds = {Rat(1 + rep.sigma) / 2, Rat(rep.sigma)};
  }
  if (mixed_formula_applies(g)) rep.beta_mixed_exact = beta_mixed_formula(g);
  rep.eta = neighborhood_components(g);

  if (rep.beta_row < 1 || rep.beta_degree < 1) {
    throw InternalError("beta values must be at least one");
  }
  if (g.has_edges() && rep.beta_row != rep.sigma) {
    throw InternalError("row factor must match the induced star number");
  }
  if (rep.beta_degree != rep.delta_plus_one) {
    throw InternalError("degree factor must match max degree plus one");
  }
  if (rep.beta_mixed_exact &&
      (*rep.beta_mixed_exact < rep.beta_mixed_bounds.first ||
       *rep.beta_mixed_exact > rep.beta_mixed_bounds.second)) {
    throw InternalError("mixed factor outside its bounds");
  }
  return rep;
}

}  // namespace qsched
