#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qsched/graph.hpp"
#include "qsched/json_io.hpp"

#include "test_util.hpp"

using namespace qsched;
using namespace qsched::testutil;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("qsched_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& body) {
  auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path.string();
}

// env goes in front of the command so it only applies to the child
RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  auto out_path = scratch_dir() / ("out" + std::to_string(counter));
  auto err_path = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(QSCHED_CLI_PATH) + " " + args + " >" + out_path.string() +
         " 2>" + err_path.string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
  r.out = read_text(out_path.string());
  r.err = read_text(err_path.string());
  return r;
}

std::string fx(const std::string& name) { return fixture_path(name); }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check exit codes track the verdict") {
  RunResult row = run("check --graph " + fx("star9.json") + " --demands " +
                      fx("star9_eps.json") + " --condition row");
  CHECK(row.code == 1);
  CHECK(contains(row.out, "\"admitted\": false"));
  CHECK(contains(row.out, "223/25"));

  RunResult mixed = run("check --graph " + fx("star9.json") + " --demands " +
                        fx("star9_eps.json") + " --condition mixed");
  CHECK(mixed.code == 0);
  CHECK(contains(mixed.out, "\"admitted\": true"));

  RunResult table = run("check --graph " + fx("star9.json") + " --demands " +
                        fx("star9_eps.json") +
                        " --condition row --format table");
  CHECK(table.code == 1);
  CHECK(contains(table.out, "admitted: no"));
  CHECK(contains(table.out, "link"));
  CHECK(contains(table.out, "slack"));
}

TEST_CASE("check against a network under primary interference") {
  RunResult r = run("check --graph " + fx("net_triangle.json") +
                    " --interference primary --demands " +
                    fx("net_triangle_27.json") +
                    " --condition clique-network");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "\"81/80\""));
  CHECK(contains(r.out, "\"guarantee_factor\": \"5/4\""));

  // same demands clear the plain row condition on the derived line graph
  RunResult row = run("check --graph " + fx("net_triangle.json") +
                      " --interference primary --demands " +
                      fx("net_triangle_27.json") + " --condition row");
  CHECK(row.code == 0);

  // network-only conditions refuse explicit conflict graphs
  RunResult bad = run("check --graph " + fx("cycle5.json") + " --demands " +
                      fx("cycle5_half.json") + " --condition shannon");
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "error:"));
}

TEST_CASE("oracle reports the exact optimum") {
  RunResult r = run("oracle --graph " + fx("cycle5.json") + " --demands " +
                    fx("cycle5_ones.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"t_star\": \"5/2\""));
  CHECK(contains(r.out, "\"schedule\""));
  CHECK_FALSE(contains(r.out, "\"feasible\""));

  RunResult tight = run("oracle --graph " + fx("cycle5.json") + " --demands " +
                        fx("cycle5_ones.json") + " --T 2");
  CHECK(tight.code == 1);
  CHECK(contains(tight.out, "\"feasible\": false"));

  RunResult loose = run("oracle --graph " + fx("cycle5.json") + " --demands " +
                        fx("cycle5_ones.json") + " --T 3 --format table");
  CHECK(loose.code == 0);
  CHECK(contains(loose.out, "t_star: 5/2"));
  CHECK(contains(loose.out, "feasible at T=3: yes"));
}

TEST_CASE("enumeration caps: flag beats env beats default") {
  std::string base = "oracle --graph " + fx("cycle5.json") + " --demands " +
                     fx("cycle5_ones.json");
  RunResult capped = run(base + " --cap 3");
  CHECK(capped.code == 2);
  CHECK(contains(capped.err, "error:"));

  RunResult env_capped = run(base, "QSCHED_ENUM_CAP=3");
  CHECK(env_capped.code == 2);

  RunResult overridden = run(base + " --cap 10", "QSCHED_ENUM_CAP=3");
  CHECK(overridden.code == 0);
  CHECK(contains(overridden.out, "5/2"));

  RunResult junk = run(base, "QSCHED_ENUM_CAP=banana");
  CHECK(junk.code == 2);
  CHECK(contains(junk.err, "QSCHED_ENUM_CAP"));
}

TEST_CASE("analyze emits the report plus optional extras") {
  RunResult r = run("analyze --graph " + fx("star9.json") + " --imp");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"sigma\": 9"));
  CHECK(contains(r.out, "\"beta_degree\": \"10\""));
  CHECK(contains(r.out, "\"beta_mixed_exact\": \"5\""));
  CHECK(contains(r.out, "\"imp\": \"1\""));  // bipartite, hence perfect

  RunResult w = run("analyze --graph " + fx("cycle5.json") +
                    " --imp --witness");
  CHECK(w.code == 0);
  CHECK(contains(w.out, "\"imp\": \"5/4\""));
  CHECK(contains(w.out, "\"witnesses\""));
  CHECK(contains(w.out, "\"beta_row\""));

  RunResult table = run("analyze --graph " + fx("star9.json") +
                        " --format table");
  CHECK(contains(table.out, "sigma: 9"));
  CHECK(contains(table.out, "beta_mixed_exact: 5"));
}

TEST_CASE("linegraph output parses back as a conflict graph") {
  RunResult r = run("linegraph --graph " + fx("net_triangle.json"));
  REQUIRE(r.code == 0);
  ConflictGraph g = parse_conflict_graph(r.out);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 3);  // line graph of a triangle is a triangle
}

TEST_CASE("schedule builds, rejects, and honors --order") {
  RunResult ok = run("schedule --graph " + fx("cycle5.json") + " --demands " +
                     fx("cycle5_quarter.json"));
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "\"assignments\""));

  RunResult act = run("schedule --graph " + fx("cycle5.json") + " --demands " +
                      fx("cycle5_quarter.json") +
                      " --activation --format table");
  CHECK(act.code == 0);
  CHECK(contains(act.out, "total duration:"));

  RunResult ordered = run("schedule --graph " + fx("cycle5.json") +
                          " --demands " + fx("cycle5_quarter.json") +
                          " --order v4,v3,v2,v1,v0");
  CHECK(ordered.code == 0);

  RunResult rejected = run("schedule --graph " + fx("cycle5.json") +
                           " --demands " + fx("cycle5_ones.json"));
  CHECK(rejected.code == 1);
  CHECK(contains(rejected.err, "rejected:"));

  RunResult bad_order = run("schedule --graph " + fx("cycle5.json") +
                            " --demands " + fx("cycle5_quarter.json") +
                            " --order v0,v1");
  CHECK(bad_order.code == 2);
  CHECK(contains(bad_order.err, "error:"));
}

TEST_CASE("simulate formats and seed override") {
  std::string base = "simulate --graph " + fx("star9.json") + " --scenario " +
                     fx("star9_row_scenario.json");
  RunResult csv = run(base + " --format csv");
  CHECK(csv.code == 0);
  // offline_t_star covers the whole offered load, rejected hub included
  CHECK(csv.out ==
        "admitted,rejected,ignored,messages,admitted_demand,offline_t_star,"
        "offline_feasible\n9,1,0,9,81/10,1,true\n");

  RunResult mixed = run("simulate --graph " + fx("star9.json") +
                        " --scenario " + fx("star9_mixed_scenario.json") +
                        " --format csv");
  CHECK(mixed.code == 0);
  CHECK(contains(mixed.out, "\n10,0,0,"));

  RunResult jsonl = run(base + " --format jsonl");
  int lines = 0;
  for (char c : jsonl.out)
    if (c == '\n') ++lines;
  CHECK(lines == 11);  // ten decisions plus the metrics line

  RunResult seeded = run(base + " --seed 777");
  CHECK(seeded.code == 0);
  CHECK(contains(seeded.out, "\"seed\": 777"));
}

TEST_CASE("malformed inputs and usage errors exit 2") {
  std::string broken = write_scratch("broken.json", "{\"vertices\": [");
  RunResult bad_json = run("check --graph " + broken + " --demands " +
                           fx("cycle5_ones.json") + " --condition row");
  CHECK(bad_json.code == 2);
  CHECK(contains(bad_json.err, "invalid JSON"));

  RunResult missing = run("oracle --graph /nonexistent.json --demands " +
                          fx("cycle5_ones.json"));
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "cannot read"));

  RunResult bad_cond = run("check --graph " + fx("cycle5.json") +
                           " --demands " + fx("cycle5_ones.json") +
                           " --condition bogus");
  CHECK(bad_cond.code == 2);
  CHECK(contains(bad_cond.err, "unknown condition"));

  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);  // a subcommand is required
  CHECK(run("check --graph x.json --demands y.json --condition row "
            "--format csv")
            .code == 2);  // csv is simulate-only
  CHECK(run("--help").code == 0);
  CHECK(run("check --help").code == 0);
}

TEST_CASE("output lands in --out when asked") {
  auto path = scratch_dir() / "verdict.json";
  RunResult r = run("check --graph " + fx("star9.json") + " --demands " +
                    fx("star9_eps.json") + " --condition mixed --out " +
                    path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(contains(read_text(path.string()), "\"admitted\": true"));
}
