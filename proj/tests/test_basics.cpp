#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <chrono>
#include <set>

#include "qsched/cancel.hpp"
#include "qsched/demand.hpp"
#include "qsched/errors.hpp"
#include "qsched/graph.hpp"
#include "qsched/random.hpp"
#include "qsched/rational.hpp"

#include "test_util.hpp"

using namespace qsched;
using namespace qsched::testutil;

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("5/4") == frac(5, 4));
  CHECK(rat_from_string("3") == 3);
  CHECK(rat_from_string("-7") == -7);
  CHECK(rat_from_string("0.25") == frac(1, 4));
  CHECK(rat_from_string("1.5") == frac(3, 2));
  CHECK(rat_from_string("-0.2") == frac(-1, 5));
  CHECK(rat_from_string("10/4") == frac(5, 2));  // canonicalized
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.2.3"), ParseError);
}

TEST_CASE("rational printing") {
  CHECK(rat_to_string(frac(5, 4)) == "5/4");
  CHECK(rat_to_string(Rat(3)) == "3");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_to_string(frac(-2, 3)) == "-2/3");
  // round trip
  for (const char* text : {"22/7", "0", "-13/11", "100"}) {
    CHECK(rat_to_string(rat_from_string(text)) == text);
  }
}

TEST_CASE("demand vector basics") {
  DemandVector tau = DemandVector::from_map(
      {{"a", frac(1, 2)}, {"b", frac(1, 3)}, {"c", 0}});
  CHECK(tau.size() == 3);
  CHECK(tau.contains("a"));
  CHECK_FALSE(tau.contains("z"));
  CHECK(tau.at("b") == frac(1, 3));
  CHECK_THROWS_AS(tau.at("z"), DomainError);
  CHECK(tau.total() == frac(5, 6));
  CHECK(tau.sum({"a", "c"}) == frac(1, 2));
  CHECK(tau.sum({}) == 0);
  CHECK_THROWS_AS(tau.sum({"a", "z"}), DomainError);
  CHECK(tau.scaled(2).at("a") == 1);
  CHECK(tau.restricted({"a"}).size() == 1);
  CHECK_THROWS_AS(DemandVector::from_map({{"a", frac(-1, 2)}}), DomainError);
}

TEST_CASE("demand vector matches graph domain") {
  ConflictGraph g = make_path(3);
  DemandVector good = uniform_demands(g, frac(1, 4));
  CHECK(good.matches(g));
  good.require_matches(g);
  DemandVector missing = DemandVector::from_map({{"v0", 1}});
  CHECK_FALSE(missing.matches(g));
  CHECK_THROWS_AS(missing.require_matches(g), DomainError);
  DemandVector extra = DemandVector::from_map(
      {{"v0", 1}, {"v1", 1}, {"v2", 1}, {"v3", 1}});
  CHECK_FALSE(extra.matches(g));
}

TEST_CASE("demand normalization") {
  RawDemandSpec spec;
  spec.medium_bandwidth = 100;
  spec.entries["a"] = {Rat(30), Rat(60)};
  spec.entries["b"] = {Rat(10), Rat(100)};
  DemandVector tau = normalize_demands(spec);
  CHECK(tau.at("a") == frac(1, 2));
  CHECK(tau.at("b") == frac(1, 10));

  RawDemandSpec zero_cap = spec;
  zero_cap.entries["a"].capacity = 0;
  CHECK_THROWS_AS(normalize_demands(zero_cap), DomainError);
  RawDemandSpec neg_rate = spec;
  neg_rate.entries["a"].rate = -1;
  CHECK_THROWS_AS(normalize_demands(neg_rate), DomainError);
  RawDemandSpec over = spec;
  over.entries["a"].capacity = 101;
  CHECK_THROWS_AS(normalize_demands(over), DomainError);
}

TEST_CASE("network graph validation") {
  NetworkGraph net = NetworkGraph::create(
      {"x", "y", "z"},
      {{"e1", "x", "y"}, {"e0", "y", "z"}, {"e2", "y", "x"}});  // e2 parallel
  CHECK(net.nodes().size() == 3);
  CHECK(net.links().size() == 3);
  CHECK(net.links()[0].id == "e0");  // sorted by id
  CHECK(net.has_link("e2"));
  CHECK(net.link("e1").u == "x");
  CHECK(net.links_at("y") == std::vector<std::string>{"e0", "e1", "e2"});
  CHECK_THROWS_AS(net.links_at("nope"), DomainError);

  CHECK_THROWS_AS(
      NetworkGraph::create({"x"}, {{"e0", "x", "missing"}}), DomainError);
  CHECK_THROWS_AS(NetworkGraph::create({"x"}, {{"e0", "x", "x"}}), DomainError);
  CHECK_THROWS_AS(
      NetworkGraph::create({"x", "y"}, {{"e0", "x", "y"}, {"e0", "y", "x"}}),
      DomainError);
}

TEST_CASE("conflict graph structure") {
  ConflictGraph g = ConflictGraph::create(
      {"b", "a", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
  CHECK(g.size() == 3);
  CHECK(g.vertices() == std::vector<std::string>{"a", "b", "c"});  // sorted
  CHECK(g.edge_count() == 2);  // duplicate edge collapsed
  CHECK(g.adjacent(g.index_of("a"), g.index_of("b")));
  CHECK(g.adjacent(g.index_of("b"), g.index_of("a")));
  CHECK_FALSE(g.adjacent(g.index_of("a"), g.index_of("c")));
  CHECK(g.neighbors("b") == std::set<std::string>{"a", "c"});
  CHECK(g.degree(g.index_of("b")) == 2);
  CHECK(g.max_degree() == 2);
  CHECK_THROWS_AS(g.index_of("zz"), DomainError);
  CHECK_THROWS_AS(ConflictGraph::create({"a"}, {{"a", "a"}}), DomainError);
  CHECK_THROWS_AS(ConflictGraph::create({"a"}, {{"a", "b"}}), DomainError);
}

TEST_CASE("conflict graph views") {
  ConflictGraph c5 = make_cycle(5);
  CHECK(c5.is_connected());
  CHECK(c5.is_odd_cycle());
  CHECK_FALSE(c5.is_complete());
  CHECK_FALSE(make_cycle(6).is_odd_cycle());
  CHECK(make_complete(3).is_odd_cycle());  // a triangle is both
  CHECK(make_complete(4).is_complete());
  CHECK_FALSE(make_path(3).is_odd_cycle());

  ConflictGraph sub = c5.induced({"v0", "v1", "v3"});
  CHECK(sub.size() == 3);
  CHECK(sub.edge_count() == 1);

  ConflictGraph comp = make_complete(4).complement();
  CHECK(comp.edge_count() == 0);

  ConflictGraph two = ConflictGraph::create(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK_FALSE(two.is_connected());
  auto comps = two.connected_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::set<std::string>{"a", "b"});
  CHECK(comps[1] == std::set<std::string>{"c", "d"});

  auto masks = c5.adjacency_masks();
  REQUIRE(masks.size() == 5);
  CHECK(masks[0] == ((1ull << 1) | (1ull << 4)));
}

TEST_CASE("splitmix streams are stable") {
  SplitMix64 a(42), b(42), c(43);
  std::vector<std::uint64_t> xs, ys;
  for (int i = 0; i < 8; ++i) {
    xs.push_back(a.next());
    ys.push_back(b.next());
  }
  CHECK(xs == ys);
  CHECK(c.next() != xs[0]);
  SplitMix64 d(1);
  for (int i = 0; i < 200; ++i) {
    auto v = d.below(7);
    CHECK(v < 7);
    int r = d.range(-3, 3);
    CHECK(r >= -3);
    CHECK(r <= 3);
  }
}

TEST_CASE("random graphs honor their contracts") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(1, 9);
    ConflictGraph g = random_connected_graph(rng, n, 30);
    CHECK(g.size() == n);
    CHECK(g.is_connected());

    DemandVector tau = random_row_feasible_demands(rng, g, 12);
    for (int v = 0; v < g.size(); ++v) {
      Rat row = tau.at(g.id_of(v));
      for (int u : g.neighbors_idx(v)) row += tau.at(g.id_of(u));
      CHECK(row <= 1);
    }

    NetworkGraph net = random_network(rng, rng.range(2, 6), 50, 20);
    CHECK(net.links().size() >= 1);
  }
}

TEST_CASE("cancel tokens") {
  CancelToken none;
  CHECK_FALSE(none.cancelled());
  none.check();

  auto expired = CancelToken::with_deadline(std::chrono::milliseconds(-1));
  CHECK(expired.cancelled());
  CHECK_THROWS_AS(expired.check(), CancelledError);

  std::atomic<bool> flag{false};
  auto token = CancelToken::with_flag(&flag);
  CHECK_FALSE(token.cancelled());
  flag = true;
  CHECK(token.cancelled());
}
