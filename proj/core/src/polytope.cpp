#include "qsched/polytope.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "qsched/errors.hpp"

namespace qsched {

namespace {

constexpr std::size_t kMaxRows = 256;
constexpr std::size_t kMaxVertices = 100000;

using TightSet = std::bitset<kMaxRows>;

struct Halfspace {  // a.x <= b
  std::vector<Rat> a;
  Rat b;
};

Rat excess(const Halfspace& h, const std::vector<Rat>& x) {
  Rat s = -h.b;
  for (std::size_t i = 0; i < h.a.size(); ++i) {
    if (h.a[i] != 0) s += h.a[i] * x[i];
  }
  return s;  // <= 0 inside, 0 on the boundary
}

}  // namespace

std::vector<std::vector<Rat>> clique_polytope_vertices(
    const ConflictGraph& g, const EnumLimits& limits,
    const CancelToken& cancel) {
  const int n = g.size();
  if (n == 0) return {std::vector<Rat>{}};

  auto cliques = maximal_cliques(g, limits, cancel);

  // Rows: nonnegativity, a bounding simplex (redundant at the end but gives
  // a small starting vertex set), then one row per maximal clique.
  std::vector<Halfspace> rows;
  for (int i = 0; i < n; ++i) {
    Halfspace h{std::vector<Rat>(n, Rat(0)), Rat(0)};
    h.a[i] = -1;
    rows.push_back(std::move(h));
  }
  {
    Halfspace h{std::vector<Rat>(n, Rat(1)), Rat(n)};
    rows.push_back(std::move(h));
  }
  for (const auto& clique : cliques) {
    Halfspace h{std::vector<Rat>(n, Rat(0)), Rat(1)};
    for (int v : clique) h.a[v] = 1;
    rows.push_back(std::move(h));
  }
  if (rows.size() > kMaxRows) {
    throw CapacityError("clique polytope has too many constraints");
  }

  // Vertices of { x >= 0, sum x <= n }: the origin and the scaled axes.
  std::vector<std::vector<Rat>> verts;
  verts.emplace_back(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = n;
    verts.push_back(std::move(v));
  }

  const std::size_t base = static_cast<std::size_t>(n) + 1;
  for (std::size_t k = base; k < rows.size(); ++k) {
    cancel.check();

    // Tight rows per vertex over everything processed so far; recomputed in
    // full each round, which keeps redundant rows honest.
    std::vector<TightSet> tight(verts.size());
    for (std::size_t j = 0; j < verts.size(); ++j) {
      for (std::size_t r = 0; r < k; ++r) {
        if (excess(rows[r], verts[j]) == 0) tight[j].set(r);
      }
    }

    std::vector<Rat> val(verts.size());
    std::vector<std::size_t> inside, outside;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      val[j] = excess(rows[k], verts[j]);
      if (val[j] < 0) {
        inside.push_back(j);
      } else if (val[j] > 0) {
        outside.push_back(j);
      }
    }
    if (outside.empty()) continue;

    std::vector<std::vector<Rat>> next;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (val[j] <= 0) next.push_back(verts[j]);
    }

    // Cut every edge crossing the new hyperplane. Two vertices are adjacent
    // iff no third vertex is tight on all their common rows.
    std::set<std::vector<Rat>> cuts;
    for (std::size_t i : inside) {
      for (std::size_t o : outside) {
        TightSet common = tight[i] & tight[o];
        bool adjacent = true;
        for (std::size_t j = 0; j < verts.size(); ++j) {
          if (j == i || j == o) continue;
          if ((common & ~tight[j]).none()) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        // val[i] < 0 < val[o]; the crossing point is at t in (0, 1).
        Rat t = val[i] / (val[i] - val[o]);
        std::vector<Rat> cut(n);
        for (int c = 0; c < n; ++c) {
          cut[c] = verts[i][c] + t * (verts[o][c] - verts[i][c]);
        }
        cuts.insert(std::move(cut));
      }
    }
    for (const auto& cut : cuts) next.push_back(cut);
    if (next.size() > kMaxVertices) {
      throw CapacityError("clique polytope vertex enumeration exploded");
    }
    verts = std::move(next);
  }

  std::sort(verts.begin(), verts.end());
  return verts;
}

}  // namespace qsched
