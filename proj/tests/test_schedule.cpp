#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qsched/conditions.hpp"
#include "qsched/errors.hpp"
#include "qsched/interval_schedule.hpp"
#include "qsched/oracle.hpp"
#include "qsched/random.hpp"

#include "test_util.hpp"

using namespace qsched;
using namespace qsched::testutil;

TEST_CASE("interval schedule bookkeeping") {
  CHECK_THROWS_AS(IntervalSchedule(0), DomainError);
  CHECK_THROWS_AS(IntervalSchedule(-1), DomainError);

  IntervalSchedule s(1);
  s.assign("a", {{frac(1, 2), frac(3, 4)}, {0, frac(1, 4)}});
  CHECK(s.has("a"));
  CHECK(s.assigned_measure("a") == frac(1, 2));
  // sorted on the way in
  CHECK(s.assignments().at("a").front().lo == 0);
  CHECK_THROWS_AS(s.assign("a", {{0, 1}}), PreconditionError);
  s.release("a");
  CHECK_FALSE(s.has("a"));
  CHECK(s.assigned_measure("a") == 0);

  CHECK_THROWS_AS(s.assign("b", {{frac(1, 2), frac(3, 2)}}), DomainError);
  CHECK_THROWS_AS(s.assign("b", {{frac(-1, 2), frac(1, 4)}}), DomainError);
  CHECK_THROWS_AS(s.assign("b", {{0, frac(1, 2)}, {frac(1, 4), 1}}),
                  DomainError);  // overlap

  // touching intervals merge
  IntervalSchedule t(1);
  t.assign("x", {{0, frac(1, 4)}, {frac(1, 4), frac(1, 2)}});
  CHECK(t.assignments().at("x").size() == 1);
  CHECK(t.assignments().at("x")[0].hi == frac(1, 2));
}

TEST_CASE("measures and busy unions") {
  CHECK(measure({}) == 0);
  CHECK(measure({{0, frac(1, 4)}, {frac(1, 2), 1}}) == frac(3, 4));

  ConflictGraph p3 = make_path(3);
  IntervalSchedule s(1);
  s.assign("v0", {{0, frac(1, 4)}});
  s.assign("v2", {{frac(1, 8), frac(3, 8)}});
  auto busy = neighbor_busy(p3, s, "v1");
  REQUIRE(busy.size() == 1);  // the two neighbor ranges fuse
  CHECK(busy[0].lo == 0);
  CHECK(busy[0].hi == frac(3, 8));
  CHECK(free_measure(p3, s, "v1") == frac(5, 8));
  // v0 and v2 do not conflict, so each ignores the other
  CHECK(free_measure(p3, s, "v0") == 1);
}

TEST_CASE("first fit fills the earliest gaps") {
  ConflictGraph p3 = make_path(3);
  IntervalSchedule s(1);
  s.assign("v0", {{frac(1, 8), frac(1, 4)}, {frac(1, 2), frac(5, 8)}});

  IntervalSchedule after = first_fit_insert(p3, s, "v1", frac(1, 2));
  auto placed = after.assignments().at("v1");
  REQUIRE(placed.size() == 3);  // split across the three gaps
  CHECK(placed[0].lo == 0);
  CHECK(placed[0].hi == frac(1, 8));
  CHECK(placed[1].lo == frac(1, 4));
  CHECK(placed[1].hi == frac(1, 2));
  CHECK(placed[2].lo == frac(5, 8));
  CHECK(placed[2].hi == frac(3, 4));
  CHECK(after.assigned_measure("v1") == frac(1, 2));
  // the original is untouched
  CHECK_FALSE(s.has("v1"));

  // an exact fit consumes all of v2's free time (1/2 around v1's slots)
  IntervalSchedule full = first_fit_insert(p3, after, "v2", frac(1, 2));
  CHECK(full.assigned_measure("v2") == frac(1, 2));

  CHECK_THROWS_WITH_AS(first_fit_insert(p3, after, "v2", frac(3, 5)),
                       doctest::Contains("short by"), PreconditionError);
  CHECK_THROWS_AS(first_fit_insert(p3, after, "v1", frac(1, 8)),
                  PreconditionError);  // already scheduled
}

TEST_CASE("row driven construction") {
  SplitMix64 rng(113);
  for (int trial = 0; trial < 60; ++trial) {
    ConflictGraph g = random_graph(rng, rng.range(1, 9), rng.range(10, 90));
    DemandVector tau = random_row_feasible_demands(rng, g, 10);
    if (!check_row(g, tau, 1).admitted) continue;  // guard, should not happen
    IntervalSchedule s = build_schedule_row(g, tau, 1, g.vertices());
    for (const auto& id : g.vertices()) {
      CHECK(s.assigned_measure(id) == tau.at(id));
    }
    ActivationSchedule act = to_activation(s, g);
    auto verdict = verify_schedule(g, tau, act, 1);
    CHECK(static_cast<bool>(verdict));
    for (const auto& id : g.vertices()) {
      CHECK(act.coverage(id) == tau.at(id));
    }
  }
}

TEST_CASE("construction order is free under the row condition") {
  ConflictGraph c5 = make_cycle(5);
  DemandVector tau = DemandVector::from_map({{"v0", frac(1, 3)},
                                             {"v1", frac(1, 4)},
                                             {"v2", frac(1, 5)},
                                             {"v3", frac(1, 4)},
                                             {"v4", frac(1, 3)}});
  REQUIRE(check_row(c5, tau, 1).admitted);
  std::vector<std::string> order = c5.vertices();
  std::sort(order.rbegin(), order.rend());
  IntervalSchedule reversed = build_schedule_row(c5, tau, 1, order);
  for (const auto& id : c5.vertices()) {
    CHECK(reversed.assigned_measure(id) == tau.at(id));
  }
}

TEST_CASE("construction rejects bad inputs") {
  ConflictGraph p3 = make_path(3);
  DemandVector tau = uniform_demands(p3, frac(1, 4));
  CHECK_THROWS_AS(build_schedule_row(p3, tau, 1, {"v0", "v1"}), DomainError);
  CHECK_THROWS_AS(build_schedule_row(p3, tau, 1, {"v0", "v1", "v1"}),
                  DomainError);
  CHECK_THROWS_AS(
      build_schedule_row(p3, tau, 1, {"v0", "v1", "v2", "v2"}), DomainError);

  DemandVector heavy = uniform_demands(p3, frac(1, 2));
  CHECK_THROWS_WITH_AS(build_schedule_row(p3, heavy, 1, p3.vertices()),
                       doctest::Contains("row constraint fails at link v1"),
                       PreconditionError);
}

TEST_CASE("activation view validates and compresses") {
  ConflictGraph p3 = make_path(3);
  IntervalSchedule s(1);
  s.assign("v0", {{0, frac(1, 2)}});
  s.assign("v2", {{0, frac(1, 2)}});
  s.assign("v1", {{frac(1, 2), frac(3, 4)}});
  ActivationSchedule act = to_activation(s, p3);
  REQUIRE(act.entries.size() == 2);  // idle tail dropped
  CHECK(act.entries[0].links == std::vector<std::string>{"v0", "v2"});
  CHECK(act.entries[0].duration == frac(1, 2));
  CHECK(act.entries[1].links == std::vector<std::string>{"v1"});
  CHECK(act.entries[1].duration == frac(1, 4));
  CHECK(act.total_duration() == frac(3, 4));

  // conflicting overlap is refused
  IntervalSchedule bad(1);
  bad.assign("v0", {{0, frac(1, 2)}});
  bad.assign("v1", {{frac(1, 4), frac(3, 4)}});
  CHECK_THROWS_WITH_AS(to_activation(bad, p3),
                       doctest::Contains("conflicting links"), DomainError);

  // unknown link in the schedule
  IntervalSchedule ghost(1);
  ghost.assign("zz", {{0, frac(1, 2)}});
  CHECK_THROWS_AS(to_activation(ghost, p3), DomainError);

  // adjacent identical activation sets merge
  IntervalSchedule merged(1);
  merged.assign("v0", {{0, frac(1, 4)}, {frac(1, 4), frac(1, 2)}});
  ActivationSchedule m = to_activation(merged, p3);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0].duration == frac(1, 2));
}
