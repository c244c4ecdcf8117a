#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsched/errors.hpp"
#include "qsched/json_io.hpp"
#include "qsched/random.hpp"
#include "qsched/simulator.hpp"

#include "test_util.hpp"

using namespace qsched;
using namespace qsched::testutil;

namespace {

SimEvent arrive(const char* link, Rat t, Rat demand) {
  SimEvent e;
  e.t = std::move(t);
  e.kind = SimEvent::Kind::arrival;
  e.link = link;
  e.demand = std::move(demand);
  return e;
}

SimEvent depart(const char* link, Rat t) {
  SimEvent e;
  e.t = std::move(t);
  e.kind = SimEvent::Kind::departure;
  e.link = link;
  return e;
}

Scenario star9_scenario(const std::string& policy) {
  Scenario sc;
  sc.T = 1;
  sc.policy = policy;
  for (int i = 1; i <= 9; ++i) {
    sc.events.push_back(
        arrive(("l" + std::to_string(i)).c_str(), i - 1, frac(9, 10)));
  }
  sc.events.push_back(arrive("hub", 9, frac(1, 10)));
  return sc;
}

int count_action(const SimTrace& trace, const std::string& action) {
  int n = 0;
  for (const auto& d : trace.decisions)
    if (d.action == action) ++n;
  return n;
}

}  // namespace

TEST_CASE("star scenario separates row from mixed") {
  ConflictGraph star = make_star(9);

  SimTrace row = simulate(star, star9_scenario("row"));
  CHECK(row.metrics.admitted == 9);
  CHECK(row.metrics.rejected == 1);
  CHECK(row.decisions.back().link == "hub");
  CHECK(row.decisions.back().action == "reject");
  CHECK(row.decisions.back().messages == 9);

  SimTrace mixed = simulate(star, star9_scenario("mixed"));
  CHECK(mixed.metrics.admitted == 10);
  CHECK(mixed.metrics.rejected == 0);
  CHECK(mixed.final_schedule.assigned_measure("hub") == frac(1, 10));
  CHECK(mixed.metrics.offline_t_star == 1);
  CHECK(mixed.metrics.offline_feasible);
}

TEST_CASE("traces are deterministic") {
  ConflictGraph star = make_star(9);
  Scenario sc = star9_scenario("mixed");
  sc.seed = 12345;
  std::string once = to_json_text(simulate(star, sc));
  std::string twice = to_json_text(simulate(star, sc));
  CHECK(once == twice);
  CHECK(once.find("12345") != std::string::npos);
}

TEST_CASE("departures free capacity") {
  ConflictGraph k2 = make_complete(2);
  Scenario sc;
  sc.T = 1;
  sc.policy = "row";
  sc.events.push_back(arrive("v0", 0, frac(3, 4)));
  sc.events.push_back(arrive("v1", 1, frac(3, 4)));   // rejected, row 3/2
  sc.events.push_back(depart("v0", 2));
  sc.events.push_back(arrive("v1", 3, frac(3, 4)));   // now fits
  SimTrace trace = simulate(k2, sc);
  CHECK(trace.decisions[0].action == "admit");
  CHECK(trace.decisions[1].action == "reject");
  CHECK(trace.decisions[2].action == "depart");
  CHECK(trace.decisions[3].action == "admit");
  CHECK(trace.metrics.admitted == 2);
  CHECK(trace.metrics.rejected == 1);
  CHECK_FALSE(trace.final_schedule.has("v0"));
}

TEST_CASE("same instant departures land before arrivals") {
  ConflictGraph k2 = make_complete(2);
  Scenario sc;
  sc.T = 1;
  sc.policy = "row";
  sc.events.push_back(arrive("v0", 0, 1));
  sc.events.push_back(arrive("v1", 5, 1));  // only fits if v0 leaves first
  sc.events.push_back(depart("v0", 5));
  SimTrace trace = simulate(k2, sc);
  CHECK(trace.decisions[1].kind == "departure");
  CHECK(trace.decisions[2].action == "admit");
}

TEST_CASE("dangling events are ignored") {
  ConflictGraph k2 = make_complete(2);
  Scenario sc;
  sc.T = 1;
  sc.policy = "row";
  sc.events.push_back(depart("v0", 0));
  sc.events.push_back(arrive("v0", 1, frac(1, 2)));
  sc.events.push_back(arrive("v0", 2, frac(1, 4)));
  SimTrace trace = simulate(k2, sc);
  CHECK(trace.decisions[0].action == "ignore");
  CHECK(trace.decisions[0].reason == "not-active");
  CHECK(trace.decisions[1].action == "admit");
  CHECK(trace.decisions[2].action == "ignore");
  CHECK(trace.decisions[2].reason == "already-active");
  CHECK(trace.metrics.ignored == 2);
}

TEST_CASE("policy passes but placement fails") {
  // chain v0-v1-v2-v3; v1's neighbors end up busy on misaligned intervals,
  // so the degree rule says yes and first fit finds the time fragmented
  ConflictGraph p4 = make_path(4);
  Scenario sc;
  sc.T = 1;
  sc.policy = "degree";
  sc.events.push_back(arrive("v0", 0, frac(1, 2)));
  sc.events.push_back(arrive("v3", 1, frac(2, 5)));
  sc.events.push_back(arrive("v2", 2, frac(1, 2)));  // placed after v3: [2/5, 9/10)
  sc.events.push_back(arrive("v1", 3, frac(1, 5)));
  SimTrace trace = simulate(p4, sc);
  CHECK(trace.decisions[2].action == "admit");
  CHECK(trace.decisions[3].action == "reject");
  CHECK(trace.decisions[3].reason == "no-fit");
  // under the row policy the same arrival is cut off by the rule instead
  sc.policy = "row";
  SimTrace row = simulate(p4, sc);
  CHECK(row.decisions[3].action == "reject");
  CHECK(row.decisions[3].reason != "no-fit");
}

TEST_CASE("strengthened policy subtracts the lightest active neighbor") {
  ConflictGraph p3 = make_path(3);
  Scenario sc;
  sc.T = 1;
  sc.policy = "row-strengthened";
  sc.events.push_back(arrive("v0", 0, frac(1, 2)));
  sc.events.push_back(arrive("v2", 1, frac(1, 2)));
  sc.events.push_back(arrive("v1", 2, frac(1, 2)));
  SimTrace trace = simulate(p3, sc);
  // v1 sees 1/2 + 1/2 + 1/2 - 1/2 = 1, admitted; plain row would say 3/2
  CHECK(trace.decisions[2].action == "admit");
  CHECK(trace.metrics.admitted == 3);

  sc.policy = "row";
  SimTrace row = simulate(p3, sc);
  CHECK(row.decisions[2].action == "reject");
}

TEST_CASE("degree policy counts only a neighborhood size query") {
  ConflictGraph star = make_star(5);
  Scenario sc;
  sc.T = 1;
  sc.policy = "degree";
  for (int i = 1; i <= 5; ++i) {
    sc.events.push_back(
        arrive(("l" + std::to_string(i)).c_str(), i - 1, frac(1, 10)));
  }
  sc.events.push_back(arrive("hub", 5, frac(1, 10)));
  SimTrace trace = simulate(star, sc);
  CHECK(trace.decisions.back().action == "admit");  // 1/10 * 6 <= 1
  for (const auto& d : trace.decisions) CHECK(d.messages == 1);
  CHECK(trace.metrics.messages == 6);
}

TEST_CASE("clique scaled policy uses the imperfection ratio by default") {
  ConflictGraph c5 = make_cycle(5);
  Scenario sc;
  sc.T = 1;
  sc.policy = "clique-scaled";
  for (int i = 0; i < 5; ++i) {
    sc.events.push_back(
        arrive(("v" + std::to_string(i)).c_str(), i, frac(2, 5)));
  }
  SimTrace with_imp = simulate(c5, sc);
  // every arrival passes the scaled clique rule (worst 5/4 * 4/5 = 1), but
  // the last link finds its two neighbors covering [0, 4/5) disjointly
  CHECK(count_action(with_imp, "admit") == 4);
  CHECK(with_imp.decisions.back().reason == "no-fit");

  sc.scale = frac(7, 4);  // harsher scale: every edge clique now refuses, so
                          // only links with no active neighbor get in
  SimTrace harsh = simulate(c5, sc);
  CHECK(count_action(harsh, "admit") == 2);
  CHECK(harsh.decisions.back().action == "reject");
  CHECK(harsh.decisions.back().reason != "no-fit");
}

TEST_CASE("metrics recompute from the trace") {
  SplitMix64 rng(127);
  for (int trial = 0; trial < 25; ++trial) {
    ConflictGraph g = random_connected_graph(rng, rng.range(2, 7), 40);
    Scenario sc;
    sc.T = 1;
    sc.policy = (trial % 2) ? "mixed" : "row";
    int events = rng.range(4, 14);
    for (int e = 0; e < events; ++e) {
      const auto& ids = g.vertices();
      std::string link = ids[rng.below(ids.size())];
      if (rng.chance(30)) {
        sc.events.push_back(depart(link.c_str(), e));
      } else {
        sc.events.push_back(
            arrive(link.c_str(), e, frac(rng.range(0, 6), 6)));
      }
    }
    SimTrace trace = simulate(g, sc);
    SimMetrics again = recompute_metrics(trace, g);
    CHECK(again.admitted == trace.metrics.admitted);
    CHECK(again.rejected == trace.metrics.rejected);
    CHECK(again.ignored == trace.metrics.ignored);
    CHECK(again.messages == trace.metrics.messages);
    CHECK(again.admitted_demand == trace.metrics.admitted_demand);
    CHECK(again.offline_t_star == trace.metrics.offline_t_star);
    CHECK(again.offline_feasible == trace.metrics.offline_feasible);
  }
}

TEST_CASE("network policies") {
  NetworkGraph tri = NetworkGraph::create(
      {"x", "y", "z"},
      {{"e0", "x", "y"}, {"e1", "y", "z"}, {"e2", "z", "x"}});
  Scenario sc;
  sc.T = 1;
  sc.policy = "clique-network";
  sc.events.push_back(arrive("e0", 0, frac(27, 100)));
  sc.events.push_back(arrive("e1", 1, frac(27, 100)));
  sc.events.push_back(arrive("e2", 2, frac(27, 100)));
  SimTrace trace = simulate_network(tri, sc);
  CHECK(trace.metrics.admitted == 2);
  CHECK(trace.decisions.back().action == "reject");  // 5/4 * 81/100 > 1
  // two incident active links plus one live triangle query
  CHECK(trace.decisions.back().messages == 3);

  sc.policy = "shannon";
  SimTrace sh = simulate_network(tri, sc);
  CHECK(sh.metrics.admitted == 3);  // loads stay at 54/100 <= 2/3

  // network-only policies refuse to run on a bare conflict graph
  ConflictGraph k3 = make_complete(3);
  Scenario bad;
  bad.T = 1;
  bad.policy = "clique-network";
  bad.events.push_back(arrive("v0", 0, frac(1, 4)));
  CHECK_THROWS_AS(simulate(k3, bad), DomainError);
}

TEST_CASE("scenario validation") {
  ConflictGraph k2 = make_complete(2);
  Scenario sc;
  sc.T = 0;
  sc.policy = "row";
  CHECK_THROWS_AS(simulate(k2, sc), DomainError);
  sc.T = 1;
  sc.policy = "nope";
  CHECK_THROWS_AS(simulate(k2, sc), DomainError);
  sc.policy = "row";
  sc.events.push_back(arrive("ghost", 0, 1));
  CHECK_THROWS_AS(simulate(k2, sc), DomainError);
  sc.events.clear();
  sc.events.push_back(arrive("v0", -1, 1));
  CHECK_THROWS_AS(simulate(k2, sc), DomainError);
}
