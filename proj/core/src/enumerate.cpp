#include "qsched/enumerate.hpp"

#include <algorithm>
#include <bit>

#include "qsched/errors.hpp"

namespace qsched {

namespace {

using std::uint64_t;

void require_within_cap(const ConflictGraph& g, const EnumLimits& limits) {
  if (limits.max_vertices > 64) {
    throw CapacityError("enumeration cap above 64 vertices is not supported");
  }
  if (g.size() > limits.max_vertices) {
    throw CapacityError("graph has " + std::to_string(g.size()) +
                        " vertices, enumeration cap is " +
                        std::to_string(limits.max_vertices));
  }
}

struct BronKerbosch {
  const std::vector<uint64_t>& adj;
  int n;
  const CancelToken& cancel;
  std::vector<uint64_t> out;

  void run(uint64_t r, uint64_t p, uint64_t x) {
    cancel.check();
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    // Pivot on the candidate dominating most of P.
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (uint64_t m = px; m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      int covered = std::popcount(p & adj[u]);
      if (covered > best) {
        best = covered;
        pivot = u;
      }
    }
    uint64_t candidates = p & ~adj[pivot];
    for (uint64_t m = candidates; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      uint64_t bit = uint64_t{1} << v;
      run(r | bit, p & adj[v], x & adj[v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

std::vector<std::vector<int>> masks_to_sets(std::vector<uint64_t> masks) {
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (uint64_t m : masks) {
    std::vector<int> set;
    for (uint64_t rest = m; rest != 0; rest &= rest - 1) {
      set.push_back(std::countr_zero(rest));
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> enumerate_cliques_of(
    const std::vector<uint64_t>& adj, int n, const CancelToken& cancel) {
  uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  BronKerbosch bk{adj, n, cancel, {}};
  bk.run(0, full, 0);
  return masks_to_sets(std::move(bk.out));
}

}  // namespace

std::vector<std::vector<int>> maximal_independent_sets(
    const ConflictGraph& g, const EnumLimits& limits,
    const CancelToken& cancel) {
  require_within_cap(g, limits);
  int n = g.size();
  if (n == 0) return {};
  uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  // Independent sets of g are cliques of the complement.
  std::vector<uint64_t> co(n);
  const auto& adj = g.adjacency_masks();
  for (int v = 0; v < n; ++v) {
    co[v] = full & ~adj[v] & ~(uint64_t{1} << v);
  }
  return enumerate_cliques_of(co, n, cancel);
}

std::vector<std::vector<int>> maximal_cliques(const ConflictGraph& g,
                                              const EnumLimits& limits,
                                              const CancelToken& cancel) {
  require_within_cap(g, limits);
  if (g.size() == 0) return {};
  return enumerate_cliques_of(g.adjacency_masks(), g.size(), cancel);
}

namespace {

struct MisBound {
  const std::vector<uint64_t>& adj;
  const CancelToken& cancel;
  int best = 0;

  void search(uint64_t p, int depth) {
    cancel.check();
    if (p == 0) {
      best = std::max(best, depth);
      return;
    }
    if (depth + std::popcount(p) <= best) return;
    // Branch on a maximum-degree candidate: either exclude it (must then pick
    // one of its neighbors eventually) or include it.
    int v = -1, best_deg = -1;
    for (uint64_t m = p; m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      int d = std::popcount(p & adj[u]);
      if (d > best_deg) {
        best_deg = d;
        v = u;
      }
    }
    uint64_t bit = uint64_t{1} << v;
    search(p & ~bit & ~adj[v], depth + 1);  // take v
    if (best_deg > 0) search(p & ~bit, depth);  // skip v (only useful if v has neighbors)
  }
};

}  // namespace

int independence_number(const ConflictGraph& g, const EnumLimits& limits,
                        const CancelToken& cancel) {
  require_within_cap(g, limits);
  int n = g.size();
  if (n == 0) return 0;
  uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  MisBound mis{g.adjacency_masks(), cancel};
  mis.search(full, 0);
  return mis.best;
}

namespace {

std::vector<std::set<std::string>> to_ids(
    const ConflictGraph& g, const std::vector<std::vector<int>>& families) {
  std::vector<std::set<std::string>> out;
  out.reserve(families.size());
  for (const auto& family : families) {
    std::set<std::string> ids;
    for (int v : family) ids.insert(g.id_of(v));
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace

std::vector<std::set<std::string>> maximal_independent_set_ids(
    const ConflictGraph& g, const EnumLimits& limits,
    const CancelToken& cancel) {
  return to_ids(g, maximal_independent_sets(g, limits, cancel));
}

std::vector<std::set<std::string>> maximal_clique_ids(
    const ConflictGraph& g, const EnumLimits& limits,
    const CancelToken& cancel) {
  return to_ids(g, maximal_cliques(g, limits, cancel));
}

}  // namespace qsched
