#include "qsched/line_graph.hpp"

#include <algorithm>
#include <utility>

#include "qsched/analysis.hpp"
#include "qsched/errors.hpp"

namespace qsched {

namespace {

void require_network_demands(const NetworkGraph& net, const DemandVector& tau,
                             const Rat& T) {
  if (T <= 0) throw DomainError("budget T must be positive");
  if (tau.size() != net.links().size()) {
    throw DomainError("demand vector does not match the network's links");
  }
  for (const auto& link : net.links()) {
    if (!tau.contains(link.id)) {
      throw DomainError("no demand for link " + link.id);
    }
  }
}

bool shares_endpoint(const Link& a, const Link& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
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

}  // namespace

ConflictGraph line_conflict_graph(const NetworkGraph& net) {
  std::vector<std::string> ids;
  for (const auto& link : net.links()) ids.push_back(link.id);
  std::vector<std::pair<std::string, std::string>> edges;
  const auto& links = net.links();
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (std::size_t j = i + 1; j < links.size(); ++j) {
      if (shares_endpoint(links[i], links[j])) {
        edges.emplace_back(links[i].id, links[j].id);
      }
    }
  }
  return ConflictGraph::create(std::move(ids), edges);
}

NodeLoadView node_load_view(const NetworkGraph& net, const DemandVector& tau) {
  NodeLoadView view;
  for (const auto& node : net.nodes()) {
    Rat load = 0;
    for (const auto& id : net.links_at(node)) load += tau.at(id);
    view.load.emplace(node, std::move(load));
  }

  // Links among each node pair, then direct triple enumeration.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> pairs;
  for (const auto& link : net.links()) {
    auto key = std::minmax(link.u, link.v);
    pairs[{key.first, key.second}].push_back(link.id);
  }
  const auto& nodes = net.nodes();
  auto linked = [&pairs](const std::string& a, const std::string& b) {
    return pairs.find({a, b}) != pairs.end();
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!linked(nodes[i], nodes[j])) continue;
      for (std::size_t k = j + 1; k < nodes.size(); ++k) {
        if (!linked(nodes[i], nodes[k]) || !linked(nodes[j], nodes[k])) {
          continue;
        }
        TriangleLoad tri;
        tri.nodes = {nodes[i], nodes[j], nodes[k]};
        tri.sum = 0;
        for (const auto& [a, b] :
             {std::pair(nodes[i], nodes[j]), std::pair(nodes[i], nodes[k]),
              std::pair(nodes[j], nodes[k])}) {
          for (const auto& id : pairs.at({a, b})) {
            tri.links.push_back(id);
            tri.sum += tau.at(id);
          }
        }
        std::sort(tri.links.begin(), tri.links.end());
        view.triangles.push_back(std::move(tri));
      }
    }
  }
  return view;
}

Verdict check_row_network(const NetworkGraph& net, const DemandVector& tau,
                          const Rat& T) {
  require_network_demands(net, tau, T);
  NodeLoadView view = node_load_view(net, tau);

  // Parallel-link demand per link: load(u) + load(v) counts the link itself
  // twice and each parallel twice, so subtract both to recover the row sum
  // tau(l) + tau(Gamma(l)) of the line conflict graph.
  Verdict verdict;
  verdict.condition = "row";
  verdict.T = T;
  for (const auto& link : net.links()) {
    Rat lhs = view.load.at(link.u) + view.load.at(link.v) - tau.at(link.id);
    for (const auto& other_id : net.links_at(link.u)) {
      if (other_id == link.id) continue;
      const Link& other = net.link(other_id);
      bool parallel = (other.u == link.u && other.v == link.v) ||
                      (other.u == link.v && other.v == link.u);
      if (parallel) lhs -= tau.at(other_id);
    }
    push_link(verdict, link.id, std::move(lhs));
  }
  return verdict;
}

Verdict check_clique_network(const NetworkGraph& net, const DemandVector& tau,
                             const Rat& T) {
  require_network_demands(net, tau, T);
  NodeLoadView view = node_load_view(net, tau);

  Verdict verdict;
  verdict.condition = "clique-network";
  verdict.T = T;
  verdict.guarantee_factor = Rat(5) / 4;
  const Rat scale = Rat(5) / 4;
  for (const auto& link : net.links()) {
    Rat worst = view.load.at(link.u);
    std::string detail = "node " + link.u;
    if (view.load.at(link.v) > worst) {
      worst = view.load.at(link.v);
      detail = "node " + link.v;
    }
    for (const auto& tri : view.triangles) {
      bool has_u = std::find(tri.nodes.begin(), tri.nodes.end(), link.u) !=
                   tri.nodes.end();
      bool has_v = std::find(tri.nodes.begin(), tri.nodes.end(), link.v) !=
                   tri.nodes.end();
      if (has_u && has_v && tri.sum > worst) {
        worst = tri.sum;
        detail = "triangle {" + tri.nodes[0] + ", " + tri.nodes[1] + ", " +
                 tri.nodes[2] + "}";
      }
    }
    push_link(verdict, link.id, scale * worst, std::move(detail));
  }
  return verdict;
}

Verdict check_shannon_network(const NetworkGraph& net, const DemandVector& tau,
                              const Rat& T) {
  require_network_demands(net, tau, T);
  NodeLoadView view = node_load_view(net, tau);

  Verdict verdict;
  verdict.condition = "shannon";
  verdict.T = T;
  verdict.guarantee_factor = Rat(3) / 2;
  const Rat scale = Rat(3) / 2;
  for (const auto& link : net.links()) {
    bool u_heavier = view.load.at(link.u) >= view.load.at(link.v);
    const std::string& node = u_heavier ? link.u : link.v;
    push_link(verdict, link.id, scale * view.load.at(node), "node " + node);
  }
  return verdict;
}

int verify_line_graph_sigma(const NetworkGraph& net, const EnumLimits& limits,
                            const CancelToken& cancel) {
  int sigma = induced_star_number(line_conflict_graph(net), limits, cancel);
  if (sigma > 2) {
    throw InternalError("line conflict graph with induced star number " +
                        std::to_string(sigma));
  }
  return sigma;
}

bool is_node_incidence_or_triangle(const NetworkGraph& net,
                                   const std::set<std::string>& links) {
  if (links.empty()) return false;
  for (const auto& node : net.nodes()) {
    const auto& incident = net.links_at(node);
    if (std::set<std::string>(incident.begin(), incident.end()) == links) {
      return true;
    }
  }
  std::set<std::string> nodes;
  for (const auto& id : links) {
    const Link& link = net.link(id);
    nodes.insert(link.u);
    nodes.insert(link.v);
  }
  if (nodes.size() != 3) return false;
  std::vector<std::string> tri(nodes.begin(), nodes.end());
  std::set<std::string> spanned;
  bool all_pairs_linked[3] = {false, false, false};
  for (const auto& link : net.links()) {
    for (int p = 0; p < 3; ++p) {
      const std::string& a = tri[p];
      const std::string& b = tri[(p + 1) % 3];
      if ((link.u == a && link.v == b) || (link.u == b && link.v == a)) {
        spanned.insert(link.id);
        all_pairs_linked[p] = true;
      }
    }
  }
  return all_pairs_linked[0] && all_pairs_linked[1] && all_pairs_linked[2] &&
         spanned == links;
}

}  // namespace qsched
