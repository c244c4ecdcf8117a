#include "qsched/random.hpp"

#include <string>
#include <utility>
#include <vector>

#include "qsched/errors.hpp"

namespace qsched {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("bound must be positive");
  return next() % bound;
}

int SplitMix64::range(int lo, int hi) {
  if (hi < lo) throw DomainError("empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool SplitMix64::chance(int percent) {
  return below(100) < static_cast<std::uint64_t>(percent);
}

namespace {

std::string vertex_name(int i) { return "v" + std::to_string(i); }

}  // namespace

ConflictGraph random_connected_graph(SplitMix64& rng, int n,
                                     int extra_edge_percent) {
  if (n <= 0) throw DomainError("need at least one vertex");
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(vertex_name(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
    edges.emplace_back(ids[parent], ids[i]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.chance(extra_edge_percent)) edges.emplace_back(ids[i], ids[j]);
    }
  }
  return ConflictGraph::create(std::move(ids), edges);
}

ConflictGraph random_graph(SplitMix64& rng, int n, int edge_percent) {
  if (n <= 0) throw DomainError("need at least one vertex");
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(vertex_name(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.chance(edge_percent)) edges.emplace_back(ids[i], ids[j]);
    }
  }
  return ConflictGraph::create(std::move(ids), edges);
}

NetworkGraph random_network(SplitMix64& rng, int nodes, int link_percent,
                            int parallel_percent) {
  if (nodes < 2) throw DomainError("need at least two nodes");
  std::vector<std::string> names;
  for (int i = 0; i < nodes; ++i) names.push_back("n" + std::to_string(i));
  std::vector<Link> links;
  int counter = 0;
  auto add = [&](int i, int j) {
    links.push_back({"e" + std::to_string(counter++), names[i], names[j]});
  };
  for (int i = 0; i < nodes; ++i) {
    for (int j = i + 1; j < nodes; ++j) {
      if (!rng.chance(link_percent)) continue;
      add(i, j);
      if (rng.chance(parallel_percent)) add(i, j);
    }
  }
  if (links.empty()) {
    int i = rng.range(0, nodes - 2);
    add(i, rng.range(i + 1, nodes - 1));
  }
  return NetworkGraph::create(std::move(names), std::move(links));
}

DemandVector random_demands(SplitMix64& rng, const ConflictGraph& g, int den) {
  if (den <= 0) throw DomainError("denominator must be positive");
  std::map<std::string, Rat> demands;
  for (const auto& id : g.vertices()) {
    long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(den) + 1));
    demands[id] = Rat(num) / Rat(den);
  }
  return DemandVector::from_map(std::move(demands));
}

DemandVector random_row_feasible_demands(SplitMix64& rng,
                                         const ConflictGraph& g, int den) {
  DemandVector raw = random_demands(rng, g, den);
  Rat worst = 0;
  for (int v = 0; v < g.size(); ++v) {
    Rat lhs = raw.at(g.id_of(v));
    for (int u : g.neighbors_idx(v)) lhs += raw.at(g.id_of(u));
    if (lhs > worst) worst = lhs;
  }
  if (worst <= 1) return raw;
  return raw.scaled(1 / worst);
}

}  // namespace qsched
