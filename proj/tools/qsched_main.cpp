#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsched/analysis.hpp"
#include "qsched/conditions.hpp"
#include "qsched/errors.hpp"
#include "qsched/graph.hpp"
#include "qsched/interval_schedule.hpp"
#include "qsched/json_io.hpp"
#include "qsched/line_graph.hpp"
#include "qsched/oracle.hpp"
#include "qsched/simulator.hpp"

namespace {

using namespace qsched;
using Json = nlohmann::ordered_json;

struct Config {
  std::string graph;
  std::string demands;
  std::string scenario;
  std::string condition;
  std::string T;  // check/schedule default to "1"; oracle treats empty as
                  // "no feasibility threshold"
  std::string interference = "explicit";
  std::string scale = "imp";
  std::string designated;
  std::string format = "json";
  std::string out;
  std::vector<std::string> order;
  int cap = 0;
  bool activation = false;
  bool want_imp = false;
  bool want_witness = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

EnumLimits resolve_limits(int cap_flag) {
  EnumLimits limits;
  if (cap_flag > 0) {
    limits.max_vertices = cap_flag;
  } else if (const char* env = std::getenv("QSCHED_ENUM_CAP")) {
    try {
      limits.max_vertices = std::stoi(env);
    } catch (const std::exception&) {
      throw DomainError("QSCHED_ENUM_CAP is not an integer");
    }
  }
  return limits;
}

struct Inputs {
  std::optional<NetworkGraph> net;  // primary interference only
  ConflictGraph g;
};

Inputs load_graph(const Config& cfg) {
  Inputs in;
  std::string text = read_file(cfg.graph);
  if (cfg.interference == "primary") {
    in.net = parse_network_graph(text);
    in.g = line_conflict_graph(*in.net);
  } else {
    in.g = parse_conflict_graph(text);
  }
  return in;
}

std::string rtrim(std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

std::string verdict_table(const Verdict& v) {
  std::ostringstream out;
  out << "condition: " << v.condition << "\n";
  out << "T: " << rat_to_string(v.T) << "\n";
  out << "admitted: " << (v.admitted ? "yes" : "no") << "\n";
  if (v.guarantee_factor) {
    out << "guarantee factor: " << rat_to_string(*v.guarantee_factor) << "\n";
  }
  std::size_t w_link = 4, w_lhs = 3, w_slack = 5;
  for (const auto& [id, c] : v.per_link) {
    w_link = std::max(w_link, id.size());
    w_lhs = std::max(w_lhs, rat_to_string(c.lhs).size());
    w_slack = std::max(w_slack, rat_to_string(c.slack).size());
  }
  out << rtrim(pad("link", w_link) + "  " + pad("lhs", w_lhs) + "  " +
               pad("slack", w_slack) + "  detail")
      << "\n";
  for (const auto& [id, c] : v.per_link) {
    out << rtrim(pad(id, w_link) + "  " + pad(rat_to_string(c.lhs), w_lhs) +
                 "  " + pad(rat_to_string(c.slack), w_slack) + "  " + c.detail)
        << "\n";
  }
  return out.str();
}

std::string activation_table(const ActivationSchedule& s) {
  std::ostringstream out;
  out << "total duration: " << rat_to_string(s.total_duration()) << "\n";
  std::size_t w = 8;
  for (const auto& e : s.entries) {
    w = std::max(w, rat_to_string(e.duration).size());
  }
  out << pad("duration", w) << "  links\n";
  for (const auto& e : s.entries) {
    out << rtrim(pad(rat_to_string(e.duration), w) + "  " + join(e.links))
        << "\n";
  }
  return out.str();
}

std::string schedule_table(const IntervalSchedule& s) {
  std::ostringstream out;
  out << "T: " << rat_to_string(s.horizon()) << "\n";
  std::size_t w = 4;
  for (const auto& [id, ivs] : s.assignments()) w = std::max(w, id.size());
  out << pad("link", w) << "  intervals\n";
  for (const auto& [id, ivs] : s.assignments()) {
    std::string row = pad(id, w) + " ";
    for (const auto& iv : ivs) {
      row += " [" + rat_to_string(iv.lo) + ", " + rat_to_string(iv.hi) + ")";
    }
    out << rtrim(row) << "\n";
  }
  return out.str();
}

Json demand_json(const DemandVector& tau) {
  Json j = Json::object();
  for (const auto& [link, value] : tau.demands()) j[link] = rat_to_string(value);
  return j;
}

int cmd_check(const Config& cfg) {
  Inputs in = load_graph(cfg);
  DemandVector tau = parse_demands(read_file(cfg.demands));
  EnumLimits limits = resolve_limits(cfg.cap);
  Rat T = rat_from_string(cfg.T);
  const std::string& c = cfg.condition;
  Verdict v;
  if (cfg.interference == "primary" && c == "row") {
    v = check_row_network(*in.net, tau, T);
  } else if (c == "clique-network" || c == "shannon") {
    if (!in.net) {
      throw DomainError(c + " applies to networks only (--interference primary)");
    }
    v = c == "shannon" ? check_shannon_network(*in.net, tau, T)
                       : check_clique_network(*in.net, tau, T);
  } else if (c == "row") {
    v = check_row(in.g, tau, T);
  } else if (c == "row-strengthened") {
    v = check_row_strengthened_auto(in.g, tau, T, cfg.designated);
  } else if (c == "row-designated") {
    std::string designated = cfg.designated;
    if (designated.empty()) {
      if (in.g.size() == 0) throw DomainError("graph has no links");
      designated = in.g.vertices().front();
    }
    v = check_row_strengthened_designated(in.g, tau, T, designated);
  } else if (c == "degree") {
    v = check_degree(in.g, tau, T);
  } else if (c == "mixed") {
    v = check_mixed(in.g, tau, T);
  } else if (c == "clique-necessary") {
    v = check_clique_necessary(in.g, tau, T, limits);
  } else if (c == "clique-scaled") {
    Rat scale = cfg.scale == "imp" ? imperfection_ratio(in.g, limits).value
                                   : rat_from_string(cfg.scale);
    v = check_clique_scaled(in.g, tau, T, scale, limits);
  } else {
    throw DomainError("unknown condition: " + c);
  }
  emit(cfg.format == "table" ? verdict_table(v) : to_json_text(v), cfg.out);
  return v.admitted ? 0 : 1;
}

int cmd_oracle(const Config& cfg) {
  Inputs in = load_graph(cfg);
  DemandVector tau = parse_demands(read_file(cfg.demands));
  EnumLimits limits = resolve_limits(cfg.cap);
  OracleResult r = minimum_duration(in.g, tau, limits);
  std::optional<Rat> T;
  if (!cfg.T.empty()) T = rat_from_string(cfg.T);
  bool feasible = !T || r.t_star <= *T;
  if (cfg.format == "table") {
    std::ostringstream out;
    out << "t_star: " << rat_to_string(r.t_star) << "\n";
    out << "basis size: " << r.basis_size << "\n";
    if (T) {
      out << "feasible at T=" << rat_to_string(*T) << ": "
          << (feasible ? "yes" : "no") << "\n";
    }
    out << activation_table(r.schedule);
    emit(out.str(), cfg.out);
  } else {
    Json j = Json::parse(to_json_text(r));
    if (T) {
      j["T"] = rat_to_string(*T);
      j["feasible"] = feasible;
    }
    emit(j.dump(2) + "\n", cfg.out);
  }
  return feasible ? 0 : 1;
}

int cmd_analyze(const Config& cfg) {
  Inputs in = load_graph(cfg);
  EnumLimits limits = resolve_limits(cfg.cap);
  PerformanceReport rep = report(in.g, limits);
  std::optional<ImperfectionResult> imp;
  if (cfg.want_imp) imp = imperfection_ratio(in.g, limits);
  std::optional<BetaResult> w_row, w_degree, w_mixed;
  if (cfg.want_witness) {
    w_row = beta_row_lp(in.g, limits);
    w_degree = beta_degree_lp(in.g, limits);
    w_mixed = beta_mixed_lp(in.g, limits);
  }
  if (cfg.format == "table") {
    std::ostringstream out;
    out << "sigma: " << rep.sigma << "\n";
    out << "delta_plus_one: " << rep.delta_plus_one << "\n";
    out << "beta_row: " << rat_to_string(rep.beta_row) << "\n";
    out << "beta_degree: " << rat_to_string(rep.beta_degree) << "\n";
    out << "beta_mixed_bounds: [" << rat_to_string(rep.beta_mixed_bounds.first)
        << ", " << rat_to_string(rep.beta_mixed_bounds.second) << "]\n";
    if (rep.beta_mixed_exact) {
      out << "beta_mixed_exact: " << rat_to_string(*rep.beta_mixed_exact)
          << "\n";
    }
    out << "eta:\n";
    for (const auto& [id, count] : rep.eta) {
      out << "  " << id << ": " << count << "\n";
    }
    if (imp) out << "imp: " << rat_to_string(imp->value) << "\n";
    auto dump_witness = [&out](const char* name, const DemandVector& tau) {
      out << name << " witness:\n";
      for (const auto& [link, value] : tau.demands()) {
        out << "  " << link << ": " << rat_to_string(value) << "\n";
      }
    };
    if (w_row) dump_witness("beta_row", w_row->witness);
    if (w_degree) dump_witness("beta_degree", w_degree->witness);
    if (w_mixed) dump_witness("beta_mixed", w_mixed->witness);
    if (imp && cfg.want_witness) dump_witness("imp", imp->witness);
    emit(out.str(), cfg.out);
  } else {
    Json j = Json::parse(to_json_text(rep));
    if (imp) j["imp"] = rat_to_string(imp->value);
    if (cfg.want_witness) {
      Json w = Json::object();
      w["beta_row"] = demand_json(w_row->witness);
      w["beta_degree"] = demand_json(w_degree->witness);
      w["beta_mixed"] = demand_json(w_mixed->witness);
      if (imp) w["imp"] = demand_json(imp->witness);
      j["witnesses"] = std::move(w);
    }
    emit(j.dump(2) + "\n", cfg.out);
  }
  return 0;
}

int cmd_schedule(const Config& cfg) {
  Inputs in = load_graph(cfg);
  DemandVector tau = parse_demands(read_file(cfg.demands));
  Rat T = rat_from_string(cfg.T);
  std::vector<std::string> order =
      cfg.order.empty() ? in.g.vertices() : cfg.order;
  IntervalSchedule sched;
  try {
    sched = build_schedule_row(in.g, tau, T, order);
  } catch (const PreconditionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  }
  if (cfg.activation) {
    ActivationSchedule act = to_activation(sched, in.g);
    emit(cfg.format == "table" ? activation_table(act) : to_json_text(act),
         cfg.out);
  } else {
    emit(cfg.format == "table" ? schedule_table(sched) : to_json_text(sched),
         cfg.out);
  }
  return 0;
}

int cmd_simulate(const Config& cfg) {
  Inputs in = load_graph(cfg);
  Scenario sc = parse_scenario(read_file(cfg.scenario));
  if (cfg.seed_set) sc.seed = cfg.seed;
  EnumLimits limits = resolve_limits(cfg.cap);
  SimTrace trace = in.net ? simulate_network(*in.net, sc, limits)
                          : simulate(in.g, sc, limits);
  if (cfg.format == "jsonl") {
    emit(trace_to_json_lines(trace), cfg.out);
  } else if (cfg.format == "csv") {
    emit(metrics_to_csv(trace.metrics), cfg.out);
  } else {
    emit(to_json_text(trace), cfg.out);
  }
  return 0;
}

int cmd_linegraph(const Config& cfg) {
  NetworkGraph net = parse_network_graph(read_file(cfg.graph));
  emit(to_json_text(line_conflict_graph(net)), cfg.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"admission control and fractional link scheduling toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto add_graph = [&cfg](CLI::App* cmd) {
    cmd->add_option("--graph", cfg.graph,
                    "conflict-graph JSON (or network JSON under primary "
                    "interference)")
        ->required();
    cmd->add_option("--interference", cfg.interference,
                    "interference model: explicit | primary")
        ->check(CLI::IsMember({"explicit", "primary"}));
  };
  auto add_common = [&cfg](CLI::App* cmd, bool with_table) {
    cmd->add_option("--cap", cfg.cap, "enumeration cap override");
    cmd->add_option("--out", cfg.out, "write output here instead of stdout");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(with_table ? CLI::IsMember({"json", "table"})
                           : CLI::IsMember({"json", "jsonl", "csv"}));
  };

  CLI::App* check = app.add_subcommand("check", "evaluate an admission condition");
  add_graph(check);
  check->add_option("--demands", cfg.demands, "demand JSON")->required();
  check->add_option("--condition", cfg.condition,
                    "row | row-strengthened | row-designated | degree | mixed "
                    "| clique-necessary | clique-scaled | clique-network | "
                    "shannon")
      ->required();
  check->add_option("--T", cfg.T, "scheduling period (rational)");
  check->add_option("--scale", cfg.scale,
                    "clique-scaled factor, a rational or \"imp\"");
  check->add_option("--designated", cfg.designated,
                    "designated link for the strengthened row condition");
  add_common(check, true);

  CLI::App* oracle = app.add_subcommand("oracle", "exact minimum schedule duration");
  add_graph(oracle);
  oracle->add_option("--demands", cfg.demands, "demand JSON")->required();
  oracle->add_option("--T", cfg.T, "feasibility threshold (rational)");
  add_common(oracle, true);

  CLI::App* analyze = app.add_subcommand("analyze", "worst-case performance report");
  add_graph(analyze);
  analyze->add_flag("--imp", cfg.want_imp, "also compute the imperfection ratio");
  analyze->add_flag("--witness", cfg.want_witness, "dump extremal demand vectors");
  add_common(analyze, true);

  CLI::App* schedule = app.add_subcommand("schedule", "first-fit schedule construction");
  add_graph(schedule);
  schedule->add_option("--demands", cfg.demands, "demand JSON")->required();
  schedule->add_option("--T", cfg.T, "scheduling period (rational)");
  schedule->add_option("--order", cfg.order, "insertion order, comma separated")
      ->delimiter(',');
  schedule->add_flag("--activation", cfg.activation,
                     "emit the activation form instead of intervals");
  add_common(schedule, true);

  CLI::App* simulate = app.add_subcommand("simulate", "online admission simulation");
  add_graph(simulate);
  simulate->add_option("--scenario", cfg.scenario, "scenario JSON")->required();
  auto* seed_opt =
      simulate->add_option("--seed", cfg.seed, "override the scenario seed");
  add_common(simulate, false);

  CLI::App* linegraph =
      app.add_subcommand("linegraph", "network JSON to conflict-graph JSON");
  linegraph->add_option("--graph", cfg.graph, "network JSON")->required();
  linegraph->add_option("--out", cfg.out, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.seed_set = seed_opt->count() > 0;
  if (check->parsed() && cfg.T.empty()) cfg.T = "1";
  if (schedule->parsed() && cfg.T.empty()) cfg.T = "1";

  try {
    if (check->parsed()) return cmd_check(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (schedule->parsed()) return cmd_schedule(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (linegraph->parsed()) return cmd_linegraph(cfg);
  } catch (const qsched::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
