#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "domset/errors.hpp"
#include "domset/generate.hpp"
#include "domset/graph.hpp"
#include "domset/instance_io.hpp"
#include "domset/msest.hpp"
#include "domset/result_doc.hpp"
#include "domset/solve.hpp"
#include "test_support.hpp"

using namespace domset;
using namespace domset::test;

namespace {

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("domset-io-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("plain graph layout with comments and blanks") {
  Graph g = parse_graph_text(
      "# path on six vertices\n"
      "6 5\n"
      "\n"
      "1 2\n2 3\n3 4  # mid edge\n4 5\n5 6\n");
  CHECK(g == path_graph(6));
}

TEST_CASE("dimacs layout") {
  Graph g = parse_graph_text(
      "c complete graph\n"
      "p edge 4 6\n"
      "e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  CHECK(g == complete_graph(4));
  for (int v = 1; v <= 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("graph reader error messages carry line numbers") {
  CHECK(message_of([] { parse_graph_text("2 1\n1 1\n"); }) ==
        "line 2: edge 1 1 is a self-loop");
  CHECK(message_of([] { parse_graph_text("3 2\n1 2\n2 1\n"); }) ==
        "line 3: duplicate edge 1 2");
  CHECK(message_of([] { parse_graph_text("2 1\n1 3\n"); }) ==
        "line 2: vertex 3 outside 1..2");
  CHECK(message_of([] { parse_graph_text("2 1\n"); }) ==
        "expected 1 edges, found 0");
  CHECK(message_of([] { parse_graph_text("2 0\n1 2\n"); }) ==
        "line 2: unexpected content after 0 edges");
  CHECK(message_of([] { parse_graph_text("x 1\n"); }) ==
        "line 1: vertex count 'x' is not an integer");
  CHECK(message_of([] { parse_graph_text("2\n"); }) ==
        "line 1: expected 'n m' header");
  CHECK(message_of([] { parse_graph_text(""); }) == "graph file is empty");
  CHECK(message_of([] { parse_graph_text("0 0\n"); }) ==
        "line 1: vertex count must be >= 1");

  CHECK(message_of([] { parse_graph_text("e 1 2\n"); }) ==
        "line 1: edge before problem line");
  CHECK(message_of([] {
          parse_graph_text("p edge 2 1\np edge 2 1\n");
        }) == "line 2: repeated problem line");
  CHECK(message_of([] { parse_graph_text("p edge 2 1\nq 1 2\n"); }) ==
        "line 2: unknown line type 'q'");
  CHECK(message_of([] { parse_graph_text("c only comments\n"); }) ==
        "missing problem line");
}

TEST_CASE("graph writing round-trips") {
  DeterministicRng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.uniform_int(1, 12);
    Graph g = gen_gnp(n, 0.4, rng);
    std::ostringstream out;
    write_graph(out, g);
    CHECK(parse_graph_text(out.str()) == g);
  }
}

TEST_CASE("weights reader") {
  std::istringstream in("1 4\n2 2\n2 2\n4 1\n");
  auto w = read_weights(in);
  CHECK(w.mu == 2);
  CHECK(w.size() == 4);
  CHECK(w.exact);
  CHECK(w.units[0] == std::vector<long long>{1, 4});

  std::istringstream ragged("1 2\n3\n");
  CHECK(message_of([&] { read_weights(ragged); }) ==
        "line 2: row has 1 columns, expected 2");

  std::istringstream bad("1\n-2\n");
  CHECK_THROWS_AS(read_weights(bad), InputError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_weights(empty), InputError);
}

TEST_CASE("weight rows round-trip through text") {
  DeterministicRng rng(29);
  auto rows = random_integer_weights(5, 3, 1, 9, rng);
  std::ostringstream out;
  write_weight_rows(out, rows);
  std::istringstream in(out.str());
  auto w = read_weights(in);
  CHECK(w.mu == 3);
  CHECK(w.size() == 5);
  for (int v = 0; v < 5; ++v)
    for (int j = 0; j < 3; ++j)
      CHECK(std::to_string(w.units[v][j]) == rows[v][j]);
}

TEST_CASE("estimates reader expects position form") {
  std::istringstream in("3 2\n1 1 0\n0 2 0\n0 1 1\n");
  auto t = read_estimates(in);
  CHECK(t.l == 3);
  CHECK(t.eta == 2);
  REQUIRE(t.size() == 3);
  CHECK(to_string(t.rows[0]) == "{1,2}");
  CHECK(to_string(t.rows[1]) == "{2,2}");
  CHECK(to_string(t.rows[2]) == "{2,3}");

  std::istringstream wide("3 2\n1 1\n");
  CHECK(message_of([&] { read_estimates(wide); }) ==
        "line 2: row has 2 columns, expected 3 level counts");

  std::istringstream off("3 2\n1 0 0\n");
  CHECK(message_of([&] { read_estimates(off); }) ==
        "line 2: row holds 1 elements, header says 2");

  std::istringstream gap("3 2\n1 0 1\n");
  CHECK(message_of([&] { read_estimates(gap); }) ==
        "line 2: estimate must cover a contiguous range of levels");

  std::istringstream head("3\n1 0 0\n");
  CHECK(message_of([&] { read_estimates(head); }) ==
        "line 1: expected 'l eta' header");

  std::istringstream none("3 2\n");
  CHECK(message_of([&] { read_estimates(none); }) ==
        "estimates file has no rows");
}

TEST_CASE("estimate tables round-trip through text") {
  DeterministicRng rng(31);
  auto t = random_estimates(6, 4, 3, rng);
  std::ostringstream out;
  write_estimates(out, t);
  std::istringstream in(out.str());
  CHECK(read_estimates(in) == t);
}

TEST_CASE("bundles tie tables to the graph") {
  TempDir dir;
  write_text_file(dir.file("g.graph"), "3 2\n1 2\n2 3\n");
  write_text_file(dir.file("w.weights"), "1\n2\n3\n");
  write_text_file(dir.file("e.estimates"), "2 1\n1 0\n0 1\n1 0\n");

  auto bundle = load_bundle(dir.file("g.graph"), dir.file("w.weights"),
                            dir.file("e.estimates"));
  CHECK(bundle.graph == path_graph(3));
  REQUIRE(bundle.weights.has_value());
  CHECK(bundle.weights->mu == 1);
  REQUIRE(bundle.estimates.has_value());
  CHECK(bundle.estimates->size() == 3);
  CHECK(bundle.meta.source == dir.file("g.graph"));

  auto lone = load_bundle(dir.file("g.graph"));
  CHECK(!lone.weights.has_value());
  CHECK(!lone.estimates.has_value());

  write_text_file(dir.file("short.weights"), "1\n2\n");
  auto msg = message_of(
      [&] { load_bundle(dir.file("g.graph"), dir.file("short.weights")); });
  CHECK(msg.find("2 weight rows") != std::string::npos);
  CHECK(msg.find("3 vertices") != std::string::npos);

  write_text_file(dir.file("short.estimates"), "2 1\n1 0\n0 1\n");
  auto msg2 = message_of([&] {
    load_bundle(dir.file("g.graph"), "", dir.file("short.estimates"));
  });
  CHECK(msg2.find("2 estimate rows") != std::string::npos);

  CHECK_THROWS_AS(load_bundle(dir.file("nope.graph")), InputError);

  // File errors are prefixed with the offending path.
  write_text_file(dir.file("bad.graph"), "2 1\n1 1\n");
  auto msg3 = message_of([&] { load_bundle(dir.file("bad.graph")); });
  CHECK(msg3 == dir.file("bad.graph") + ": line 2: edge 1 1 is a self-loop");
}

TEST_CASE("vertex list parsing") {
  CHECK(parse_set_csv("2,5,7") == vs({2, 5, 7}));
  CHECK(parse_set_csv(" 2, 5 ,7 ") == vs({2, 5, 7}));
  CHECK(parse_set_csv("4") == vs({4}));
  CHECK_THROWS_AS(parse_set_csv(""), InputError);
  CHECK_THROWS_AS(parse_set_csv("1,,2"), InputError);
  CHECK_THROWS_AS(parse_set_csv("1,x"), InputError);
  CHECK_THROWS_AS(parse_set_csv("1,1"), InputError);
  CHECK_THROWS_AS(parse_set_csv("1 2"), InputError);
}

TEST_CASE("result documents parse back to themselves") {
  Graph p6 = path_graph(6);

  ProblemSpec spec;
  auto solve_doc = describe_solve(p6, spec, solve(p6, spec));
  CHECK(solve_doc["schema"] == 1);
  CHECK(solve_doc["tool"] == "domset");
  CHECK(solve_doc["command"] == "solve");
  CHECK(solve_doc["vertices"] == 6);
  CHECK(solve_doc["edges"] == 5);
  CHECK(solve_doc["status"] == "optimal");
  CHECK(solve_doc["set"] == ResultJson::array({2, 5}));
  CHECK(solve_doc["objective"] == 2);
  CHECK(solve_doc["objective"].is_number_integer());
  CHECK(solve_doc.contains("timing"));
  CHECK(solve_doc["timing"].contains("elapsed_ms"));
  CHECK(ResultJson::parse(render_json(solve_doc)) == solve_doc);

  ProblemSpec cds;
  cds.variant = Variant::CDS;
  cds.k = 3;
  auto infeasible_doc =
      describe_solve(cycle_graph(5), cds, solve(cycle_graph(5), cds));
  CHECK(infeasible_doc["status"] == "infeasible");
  CHECK(infeasible_doc["graph_connectivity"] == 2);
  CHECK(!infeasible_doc.contains("set"));
  CHECK(ResultJson::parse(render_json(infeasible_doc)) == infeasible_doc);

  auto w = WeightVectorTable::from_integers({{1, 4}, {2, 2}, {2, 2}, {4, 1}});
  Graph p4 = path_graph(4);
  auto front = pareto_front(p4, w, 0, 1);
  auto pareto_doc = describe_pareto(p4, 0, 1, front);
  CHECK(pareto_doc["command"] == "pareto");
  CHECK(pareto_doc["count"] == 3);
  CHECK(pareto_doc["points"][0]["objective"] == ResultJson::array({3, 6}));
  CHECK(ResultJson::parse(render_json(pareto_doc)) == pareto_doc);

  EstimateTable est;
  est.l = 3;
  est.eta = 1;
  est.rows = {IntervalMultisetEstimate::from_levels(3, {1}),
              IntervalMultisetEstimate::from_levels(3, {3}),
              IntervalMultisetEstimate::from_levels(3, {1})};
  Graph p3 = path_graph(3);
  auto msest_doc = describe_msest(p3, 0, 1, solve_msest(p3, est, 0, 1));
  CHECK(msest_doc["command"] == "msest");
  CHECK(msest_doc["set"] == ResultJson::array({2}));
  CHECK(msest_doc["objective"] == 0);
  CHECK(msest_doc["median"]["levels"] == ResultJson::array({3}));
  CHECK(ResultJson::parse(render_json(msest_doc)) == msest_doc);

  auto cert = check_feasible(p6, vs({2, 5}), 0, 1);
  auto check_doc = describe_check(p6, vs({2, 5}), cert);
  CHECK(check_doc["feasible"] == true);
  CHECK(check_doc["connected"] == false);
  CHECK(ResultJson::parse(render_json(check_doc)) == check_doc);

  GenReport report;
  report.model = "ring-backbone";
  report.seed = 7;
  report.graph_file = "x.graph";
  report.core = vs({1, 2, 3});
  report.core_k = 2;
  report.core_m = 1;
  auto fixture = make_fixture("ring-backbone", 3, 1);
  auto gen_doc = describe_gen(fixture.graph, report);
  CHECK(gen_doc["command"] == "gen");
  CHECK(gen_doc["core"] == ResultJson::array({1, 2, 3}));
  CHECK(!gen_doc.contains("weights_file"));
  CHECK(ResultJson::parse(render_json(gen_doc)) == gen_doc);

  auto solver = solve_min_ds(p6);
  auto reference = oracle_min_set(p6, 0, 1);
  auto oracle_doc = describe_oracle_solve(
      p6, spec, solver, reference,
      solver.best_set == reference.set);
  CHECK(oracle_doc["command"] == "oracle");
  CHECK(oracle_doc["mode"] == "solve");
  CHECK(oracle_doc["agree"] == true);
  CHECK(oracle_doc["solver_set"] == oracle_doc["reference_set"]);
  CHECK(ResultJson::parse(render_json(oracle_doc)) == oracle_doc);
}
