#include "qsched/json_io.hpp"

#include <utility>
#include <vector>

#include "json.hpp"

#include "qsched/errors.hpp"

namespace qsched {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

Rat rat_field(const Json& j, const char* key) {
  return rat_from_string(string_field(j, key));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

NetworkGraph parse_network_graph(const std::string& text) {
  Json j = parse_document(text);
  if (!j.is_object()) throw ParseError("network graph must be an object");
  std::vector<std::string> nodes;
  for (const auto& n : field(j, "nodes")) {
    if (!n.is_string()) throw ParseError("node ids must be strings");
    nodes.push_back(n.get<std::string>());
  }
  std::vector<Link> links;
  for (const auto& l : field(j, "links")) {
    if (!l.is_object()) throw ParseError("links must be objects");
    links.push_back(
        {string_field(l, "id"), string_field(l, "u"), string_field(l, "v")});
  }
  return NetworkGraph::create(std::move(nodes), std::move(links));
}

ConflictGraph parse_conflict_graph(const std::string& text) {
  Json j = parse_document(text);
  if (!j.is_object()) throw ParseError("conflict graph must be an object");
  std::vector<std::string> vertices;
  for (const auto& v : field(j, "vertices")) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string()) {
      throw ParseError("edges must be [id, id] pairs");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return ConflictGraph::create(std::move(vertices), edges);
}

DemandVector parse_demands(const std::string& text) {
  Json j = parse_document(text);
  if (!j.is_object()) throw ParseError("demand file must be an object");
  const Json& demands = field(j, "demands");
  if (!demands.is_object()) throw ParseError("\"demands\" must be an object");
  std::map<std::string, Rat> map;
  for (const auto& [link, value] : demands.items()) {
    if (!value.is_string()) {
      throw ParseError("demand for " + link + " must be a rational string");
    }
    map[link] = rat_from_string(value.get<std::string>());
  }
  return DemandVector::from_map(std::move(map));
}

Scenario parse_scenario(const std::string& text) {
  Json j = parse_document(text);
  if (!j.is_object()) throw ParseError("scenario must be an object");
  Scenario sc;
  sc.T = rat_field(j, "T");
  sc.policy = string_field(j, "policy");
  if (j.contains("scale")) sc.scale = rat_field(j, "scale");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      throw ParseError("\"seed\" must be a nonnegative integer");
    }
    sc.seed = j["seed"].get<std::uint64_t>();
  }
  for (const auto& e : field(j, "events")) {
    if (!e.is_object()) throw ParseError("events must be objects");
    SimEvent ev;
    ev.t = rat_field(e, "t");
    std::string kind = string_field(e, "kind");
    if (kind == "arrival") {
      ev.kind = SimEvent::Kind::arrival;
      ev.demand = rat_field(e, "demand");
    } else if (kind == "departure") {
      ev.kind = SimEvent::Kind::departure;
    } else {
      throw ParseError("event kind must be \"arrival\" or \"departure\"");
    }
    ev.link = string_field(e, "link");
    sc.events.push_back(std::move(ev));
  }
  return sc;
}

IntervalSchedule parse_interval_schedule(const std::string& text) {
  Json j = parse_document(text);
  if (!j.is_object()) throw ParseError("schedule must be an object");
  IntervalSchedule sched(rat_field(j, "T"));
  const Json& assignments = field(j, "assignments");
  if (!assignments.is_object()) {
    throw ParseError("\"assignments\" must be an object");
  }
  for (const auto& [link, list] : assignments.items()) {
    std::vector<Interval> intervals;
    for (const auto& iv : list) {
      if (!iv.is_array() || iv.size() != 2 || !iv[0].is_string() ||
          !iv[1].is_string()) {
        throw ParseError("intervals must be [lo, hi] rational-string pairs");
      }
      intervals.push_back({rat_from_string(iv[0].get<std::string>()),
                           rat_from_string(iv[1].get<std::string>())});
    }
    sched.assign(link, std::move(intervals));
  }
  return sched;
}

ActivationSchedule parse_activation_schedule(const std::string& text) {
  Json j = parse_document(text);
  if (!j.is_object()) throw ParseError("activation schedule must be an object");
  ActivationSchedule sched;
  for (const auto& e : field(j, "entries")) {
    ActivationEntry entry;
    for (const auto& id : field(e, "links")) {
      if (!id.is_string()) throw ParseError("entry links must be strings");
      entry.links.push_back(id.get<std::string>());
    }
    entry.duration = rat_field(e, "duration");
    sched.entries.push_back(std::move(entry));
  }
  return sched;
}

std::string to_json_text(const NetworkGraph& net) {
  Json j;
  j["nodes"] = net.nodes();
  Json links = Json::array();
  for (const auto& link : net.links()) {
    links.push_back({{"id", link.id}, {"u", link.u}, {"v", link.v}});
  }
  j["links"] = std::move(links);
  return dump(j);
}

std::string to_json_text(const ConflictGraph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (int v = 0; v < g.size(); ++v) {
    for (int u : g.neighbors_idx(v)) {
      if (u > v) edges.push_back({g.id_of(v), g.id_of(u)});
    }
  }
  j["edges"] = std::move(edges);
  return dump(j);
}

std::string to_json_text(const DemandVector& tau) {
  Json demands = Json::object();
  for (const auto& [link, value] : tau.demands()) {
    demands[link] = rat_to_string(value);
  }
  Json j;
  j["demands"] = std::move(demands);
  return dump(j);
}

std::string to_json_text(const Scenario& scenario) {
  Json j;
  j["T"] = rat_to_string(scenario.T);
  j["policy"] = scenario.policy;
  if (scenario.scale) j["scale"] = rat_to_string(*scenario.scale);
  if (scenario.seed != 0) j["seed"] = scenario.seed;
  Json events = Json::array();
  for (const auto& e : scenario.events) {
    Json ev;
    ev["t"] = rat_to_string(e.t);
    ev["kind"] = e.kind == SimEvent::Kind::arrival ? "arrival" : "departure";
    ev["link"] = e.link;
    if (e.kind == SimEvent::Kind::arrival) ev["demand"] = rat_to_string(e.demand);
    events.push_back(std::move(ev));
  }
  j["events"] = std::move(events);
  return dump(j);
}

std::string to_json_text(const Verdict& verdict) {
  Json j;
  j["condition"] = verdict.condition;
  j["T"] = rat_to_string(verdict.T);
  j["admitted"] = verdict.admitted;
  if (verdict.guarantee_factor) {
    j["guarantee_factor"] = rat_to_string(*verdict.guarantee_factor);
  }
  Json per_link = Json::object();
  for (const auto& [id, check] : verdict.per_link) {
    Json c;
    c["lhs"] = rat_to_string(check.lhs);
    c["slack"] = rat_to_string(check.slack);
    if (!check.detail.empty()) c["detail"] = check.detail;
    per_link[id] = std::move(c);
  }
  j["per_link"] = std::move(per_link);
  return dump(j);
}

namespace {

Json activation_json(const ActivationSchedule& sched) {
  Json entries = Json::array();
  for (const auto& e : sched.entries) {
    Json entry;
    entry["links"] = e.links;
    entry["duration"] = rat_to_string(e.duration);
    entries.push_back(std::move(entry));
  }
  Json j;
  j["entries"] = std::move(entries);
  j["total_duration"] = rat_to_string(sched.total_duration());
  return j;
}

Json interval_schedule_json(const IntervalSchedule& sched) {
  Json assignments = Json::object();
  for (const auto& [link, intervals] : sched.assignments()) {
    Json list = Json::array();
    for (const auto& iv : intervals) {
      list.push_back({rat_to_string(iv.lo), rat_to_string(iv.hi)});
    }
    assignments[link] = std::move(list);
  }
  Json j;
  j["T"] = rat_to_string(sched.horizon());
  j["assignments"] = std::move(assignments);
  return j;
}

Json decision_json(const Decision& d) {
  Json j;
  j["event"] = d.event_index;
  j["t"] = rat_to_string(d.t);
  j["kind"] = d.kind;
  j["link"] = d.link;
  if (d.kind == "arrival") j["demand"] = rat_to_string(d.demand);
  j["action"] = d.action;
  if (!d.reason.empty()) j["reason"] = d.reason;
  j["messages"] = d.messages;
  return j;
}

Json metrics_json(const SimMetrics& m) {
  Json j;
  j["admitted"] = m.admitted;
  j["rejected"] = m.rejected;
  j["ignored"] = m.ignored;
  j["messages"] = m.messages;
  j["admitted_demand"] = rat_to_string(m.admitted_demand);
  j["offline_t_star"] = rat_to_string(m.offline_t_star);
  j["offline_feasible"] = m.offline_feasible;
  return j;
}

}  // namespace

std::string to_json_text(const OracleResult& result) {
  Json j;
  j["t_star"] = rat_to_string(result.t_star);
  j["basis_size"] = result.basis_size;
  j["schedule"] = activation_json(result.schedule);
  return dump(j);
}

std::string to_json_text(const PerformanceReport& report) {
  Json j;
  j["sigma"] = report.sigma;
  j["delta_plus_one"] = report.delta_plus_one;
  j["beta_row"] = rat_to_string(report.beta_row);
  j["beta_degree"] = rat_to_string(report.beta_degree);
  j["beta_mixed_bounds"] = {rat_to_string(report.beta_mixed_bounds.first),
                            rat_to_string(report.beta_mixed_bounds.second)};
  if (report.beta_mixed_exact) {
    j["beta_mixed_exact"] = rat_to_string(*report.beta_mixed_exact);
  }
  Json eta = Json::object();
  for (const auto& [id, count] : report.eta) eta[id] = count;
  j["eta"] = std::move(eta);
  return dump(j);
}

std::string to_json_text(const IntervalSchedule& sched) {
  return dump(interval_schedule_json(sched));
}

std::string to_json_text(const ActivationSchedule& sched) {
  return dump(activation_json(sched));
}

std::string to_json_text(const SimTrace& trace) {
  Json j;
  j["T"] = rat_to_string(trace.T);
  j["policy"] = trace.policy;
  j["seed"] = trace.seed;
  Json decisions = Json::array();
  for (const auto& d : trace.decisions) decisions.push_back(decision_json(d));
  j["decisions"] = std::move(decisions);
  j["schedule"] = interval_schedule_json(trace.final_schedule);
  j["metrics"] = metrics_json(trace.metrics);
  return dump(j);
}

std::string trace_to_json_lines(const SimTrace& trace) {
  std::string out;
  for (const auto& d : trace.decisions) {
    out += decision_json(d).dump();
    out += "\n";
  }
  out += metrics_json(trace.metrics).dump();
  out += "\n";
  return out;
}

std::string metrics_to_csv(const SimMetrics& m) {
  std::string out =
      "admitted,rejected,ignored,messages,admitted_demand,offline_t_star,"
      "offline_feasible\n";
  out += std::to_string(m.admitted) + "," + std::to_string(m.rejected) + "," +
         std::to_string(m.ignored) + "," + std::to_string(m.messages) + "," +
         rat_to_string(m.admitted_demand) + "," +
         rat_to_string(m.offline_t_star) + "," +
         (m.offline_feasible ? "true" : "false") + "\n";
  return out;
}

}  // namespace qsched
