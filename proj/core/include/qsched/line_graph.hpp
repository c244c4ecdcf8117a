#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsched/cancel.hpp"
#include "qsched/conditions.hpp"
#include "qsched/demand.hpp"
#include "qsched/enumerate.hpp"
#include "qsched/graph.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// Conflict graph under primary interference: two links conflict iff they
/// share at least one endpoint. Parallel links share both and so conflict.
ConflictGraph line_conflict_graph(const NetworkGraph& net);

struct TriangleLoad {
  std::array<std::string, 3> nodes;  // sorted node ids
  std::vector<std::string> links;    // every link among the three nodes
  Rat sum;                           // their total demand
};

/// Network-side aggregates: per-node incident demand and the demand sums of
/// all network triangles.
struct NodeLoadView {
  std::map<std::string, Rat> load;
  std::vector<TriangleLoad> triangles;
};

NodeLoadView node_load_view(const NetworkGraph& net, const DemandVector& tau);

/// Row constraints restated on the network graph; verdict-identical, link by
/// link, to check_row on line_conflict_graph(net).
Verdict check_row_network(const NetworkGraph& net, const DemandVector& tau,
                          const Rat& T);

/// Sufficient: every node load and every triangle demand sum at most
/// (4/5) T. Reported per link as (5/4) times the worst relevant sum.
Verdict check_clique_network(const NetworkGraph& net, const DemandVector& tau,
                             const Rat& T);

/// Sufficient: every node load at most (2/3) T. Reported per link as (3/2)
/// times the heavier endpoint load.
Verdict check_shannon_network(const NetworkGraph& net, const DemandVector& tau,
                              const Rat& T);

/// Induced star number of the line conflict graph. Structurally at most 2;
/// anything larger raises InternalError.
int verify_line_graph_sigma(const NetworkGraph& net,
                            const EnumLimits& limits = {},
                            const CancelToken& cancel = {});

/// True iff the link set is exactly the links incident to one node, or
/// exactly the links spanned by one network triangle. Every maximal clique
/// of a line conflict graph is one of the two.
bool is_node_incidence_or_triangle(const NetworkGraph& net,
                                   const std::set<std::string>& links);

}  // namespace qsched
