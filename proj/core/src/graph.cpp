#include "qsched/graph.hpp"

#include <algorithm>

#include "qsched/errors.hpp"

namespace qsched {

NetworkGraph NetworkGraph::create(std::vector<std::string> nodes,
                                  std::vector<Link> links) {
  NetworkGraph g;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  g.nodes_ = std::move(nodes);

  std::sort(links.begin(), links.end(),
            [](const Link& a, const Link& b) { return a.id < b.id; });
  for (const Link& l : links) {
    if (l.u == l.v) {
      throw DomainError("link '" + l.id + "' is a self-loop");
    }
    if (!std::binary_search(g.nodes_.begin(), g.nodes_.end(), l.u) ||
        !std::binary_search(g.nodes_.begin(), g.nodes_.end(), l.v)) {
      throw DomainError("link '" + l.id + "' references an unknown node");
    }
    if (g.link_index_.count(l.id)) {
      throw DomainError("duplicate link id '" + l.id + "'");
    }
    g.link_index_[l.id] = g.links_.size();
    g.links_.push_back(l);
  }
  for (const std::string& node : g.nodes_) g.incident_[node] = {};
  for (const Link& l : g.links_) {
    g.incident_[l.u].push_back(l.id);
    g.incident_[l.v].push_back(l.id);
  }
  return g;
}

bool NetworkGraph::has_node(const std::string& id) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

bool NetworkGraph::has_link(const std::string& id) const {
  return link_index_.count(id) > 0;
}

const Link& NetworkGraph::link(const std::string& id) const {
  auto it = link_index_.find(id);
  if (it == link_index_.end()) throw DomainError("unknown link '" + id + "'");
  return links_[it->second];
}

const std::vector<std::string>& NetworkGraph::links_at(
    const std::string& node) const {
  auto it = incident_.find(node);
  if (it == incident_.end()) throw DomainError("unknown node '" + node + "'");
  return it->second;
}

ConflictGraph ConflictGraph::create(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  ConflictGraph g;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw DomainError("duplicate vertex identifier");
  }
  g.ids_ = std::move(vertices);
  g.n_ = static_cast<int>(g.ids_.size());
  std::set<std::pair<int, int>> edge_set;
  for (const auto& [a, b] : edges) {
    int ia = g.index_of(a);
    int ib = g.index_of(b);
    if (ia == ib) throw DomainError("self-loop at vertex '" + a + "'");
    edge_set.insert({std::min(ia, ib), std::max(ia, ib)});
  }
  g.adj_.assign(g.n_, {});
  for (const auto& [a, b] : edge_set) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edges_ = static_cast<int>(edge_set.size());
  if (g.n_ <= 64) {
    g.mask_.assign(g.n_, 0);
    for (const auto& [a, b] : edge_set) {
      g.mask_[a] |= std::uint64_t{1} << b;
      g.mask_[b] |= std::uint64_t{1} << a;
    }
  }
  return g;
}

bool ConflictGraph::contains(const std::string& id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

int ConflictGraph::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) {
    throw DomainError("unknown vertex '" + id + "'");
  }
  return static_cast<int>(it - ids_.begin());
}

bool ConflictGraph::adjacent(int a, int b) const {
  if (a == b) return false;
  if (!mask_.empty()) return (mask_[a] >> b) & 1;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int ConflictGraph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

int ConflictGraph::edge_count() const { return edges_; }

std::set<std::string> ConflictGraph::neighbors(const std::string& id) const {
  int v = index_of(id);
  std::set<std::string> out;
  for (int w : adj_[v]) out.insert(ids_[w]);
  return out;
}

ConflictGraph ConflictGraph::induced(const std::set<std::string>& keep) const {
  std::vector<int> idx;
  idx.reserve(keep.size());
  for (const std::string& id : keep) idx.push_back(index_of(id));
  return induced_idx(std::move(idx));
}

ConflictGraph ConflictGraph::induced_idx(std::vector<int> keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> verts;
  verts.reserve(keep.size());
  for (int v : keep) {
    if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
    verts.push_back(ids_[v]);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) {
        edges.emplace_back(ids_[keep[i]], ids_[keep[j]]);
      }
    }
  }
  return create(std::move(verts), edges);
}

ConflictGraph ConflictGraph::complement() const {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!adjacent(i, j)) edges.emplace_back(ids_[i], ids_[j]);
    }
  }
  return create(ids_, edges);
}

std::vector<std::vector<int>> ConflictGraph::components_idx() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    std::vector<int> members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : adj_[v]) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::set<std::string>> ConflictGraph::connected_components() const {
  std::vector<std::set<std::string>> out;
  for (const auto& comp : components_idx()) {
    std::set<std::string> ids;
    for (int v : comp) ids.insert(ids_[v]);
    out.push_back(std::move(ids));
  }
  return out;
}

bool ConflictGraph::is_connected() const {
  return n_ == 0 || components_idx().size() == 1;
}

bool ConflictGraph::is_odd_cycle() const {
  if (n_ < 3 || n_ % 2 == 0) return false;
  for (int v = 0; v < n_; ++v) {
    if (degree(v) != 2) return false;
  }
  return is_connected();
}

bool ConflictGraph::is_complete() const {
  return edges_ == n_ * (n_ - 1) / 2;
}

const std::vector<std::uint64_t>& ConflictGraph::adjacency_masks() const {
  if (n_ > 64) {
    throw CapacityError("adjacency masks unavailable beyond 64 vertices");
  }
  return mask_;
}

}  // namespace qsched
