#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qsched {

/// An undirected communication link between two distinct nodes. Parallel links
/// between the same node pair are allowed and carry distinct identifiers.
struct Link {
  std::string id;
  std::string u;
  std::string v;
};

/// The communication network: nodes plus undirected links. Immutable after
/// construction; all views are deterministic (sorted by identifier).
class NetworkGraph {
 public:
  /// Validates: endpoints are known nodes, no self-loops, unique link ids.
  static NetworkGraph create(std::vector<std::string> nodes,
                             std::vector<Link> links);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }

  bool has_node(const std::string& id) const;
  bool has_link(const std::string& id) const;
  const Link& link(const std::string& id) const;

  /// Identifiers of links incident to a node, sorted. Throws on unknown node.
  const std::vector<std::string>& links_at(const std::string& node) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Link> links_;  // sorted by id
  std::map<std::string, std::size_t> link_index_;
  std::map<std::string, std::vector<std::string>> incident_;
};

/// The interference model: vertices are link identifiers, edges join pairs of
/// links that cannot be simultaneously active. Vertex order is sorted by
/// identifier so every traversal and enumeration is reproducible. Immutable.
class ConflictGraph {
 public:
  ConflictGraph() = default;

  /// Validates: edge endpoints are known vertices, no self-loops. Duplicate
  /// edges collapse; the adjacency relation is symmetric and irreflexive.
  static ConflictGraph create(
      std::vector<std::string> vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return n_; }
  const std::vector<std::string>& vertices() const { return ids_; }

  bool contains(const std::string& id) const;
  /// Index of a vertex in the sorted order. Throws DomainError when unknown.
  int index_of(const std::string& id) const;
  const std::string& id_of(int idx) const { return ids_[idx]; }

  bool adjacent(int a, int b) const;
  const std::vector<int>& neighbors_idx(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int edge_count() const;
  bool has_edges() const { return edge_count() > 0; }

  /// Neighbor identifiers of a vertex, excluding the vertex itself.
  std::set<std::string> neighbors(const std::string& id) const;

  /// Subgraph induced by the given vertex identifiers.
  ConflictGraph induced(const std::set<std::string>& keep) const;
  ConflictGraph induced_idx(std::vector<int> keep) const;

  ConflictGraph complement() const;

  /// Connected components as sorted index lists, ordered by smallest member.
  std::vector<std::vector<int>> components_idx() const;
  std::vector<std::set<std::string>> connected_components() const;
  bool is_connected() const;

  /// True iff the graph is a single odd cycle (connected, 2-regular, odd order).
  bool is_odd_cycle() const;

  bool is_complete() const;

  /// Per-vertex adjacency bitmasks; only available while size() <= 64.
  const std::vector<std::uint64_t>& adjacency_masks() const;

 private:
  int n_ = 0;
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> mask_;  // empty when n_ > 64
  int edges_ = 0;
};

}  // namespace qsched
