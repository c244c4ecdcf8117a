#pragma once

#include <cstdint>

#include "qsched/demand.hpp"
#include "qsched/graph.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// Deterministic 64-bit stream (splitmix64). Hand rolled so seeded runs are
/// byte-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform-enough value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform value in [lo, hi], inclusive.
  int range(int lo, int hi);
  /// True with probability percent/100.
  bool chance(int percent);

 private:
  std::uint64_t state_;
};

/// Connected conflict graph on n vertices v0..v{n-1}: a random tree plus
/// each remaining pair with the given percent chance.
ConflictGraph random_connected_graph(SplitMix64& rng, int n,
                                     int extra_edge_percent);

/// Conflict graph with independent edges; may be disconnected.
ConflictGraph random_graph(SplitMix64& rng, int n, int edge_percent);

/// Network on nodes n0..n{k-1}: each pair carries a link with the given
/// percent chance, plus optional parallel duplicates; at least one link.
NetworkGraph random_network(SplitMix64& rng, int nodes, int link_percent,
                            int parallel_percent = 0);

/// Demands with numerators drawn from [0, den] over denominator den.
DemandVector random_demands(SplitMix64& rng, const ConflictGraph& g, int den);

/// Random demands rescaled so every row sum tau(l) + tau(Gamma(l)) is at
/// most 1 (tight at some link unless everything is zero).
DemandVector random_row_feasible_demands(SplitMix64& rng,
                                         const ConflictGraph& g, int den);

}  // namespace qsched
