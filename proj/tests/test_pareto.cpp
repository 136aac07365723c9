#include <vector>

#include "doctest.h"
#include "domset/errors.hpp"
#include "domset/generate.hpp"
#include "domset/graph.hpp"
#include "domset/oracle.hpp"
#include "domset/pareto.hpp"
#include "test_support.hpp"

using namespace domset;
using namespace domset::test;

TEST_CASE("dominance is componentwise-le and strict somewhere") {
  std::vector<long long> a{1, 2}, b{1, 3}, c{2, 1};
  CHECK(dominates(a, b));
  CHECK(!dominates(b, a));
  CHECK(!dominates(a, a));
  CHECK(!dominates(a, c));
  CHECK(!dominates(c, a));
  CHECK_THROWS_AS(dominates(a, std::vector<long long>{1}), InputError);

  CHECK(dominates(std::vector<double>{0.5, 1.0}, std::vector<double>{0.5, 2.0}));
  CHECK(!dominates(std::vector<double>{0.5, 1.0}, std::vector<double>{0.5, 1.0}));
}

TEST_CASE("path-of-four worked frontier") {
  Graph p4 = path_graph(4);
  auto w = WeightVectorTable::from_integers({{1, 4}, {2, 2}, {2, 2}, {4, 1}});
  auto front = pareto_front(p4, w, 0, 1);
  CHECK(front.status == SolveStatus::Optimal);
  CHECK(front.mu == 2);
  REQUIRE(front.points.size() == 3);

  CHECK(front.points[0].objective_units == std::vector<long long>{3, 6});
  CHECK(front.points[0].set == vs({1, 3}));
  CHECK(front.points[1].objective_units == std::vector<long long>{4, 4});
  CHECK(front.points[1].set == vs({2, 3}));
  CHECK(front.points[2].objective_units == std::vector<long long>{6, 3});
  CHECK(front.points[2].set == vs({2, 4}));

  // The natural (5,5) candidate {1,4} is dominated by (4,4) and must not
  // appear.
  for (const auto& pt : front.points)
    CHECK(pt.objective_units != std::vector<long long>{5, 5});
}

TEST_CASE("identical weight rows collapse the frontier to one point") {
  Graph p4 = path_graph(4);
  auto w = WeightVectorTable::from_integers({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  auto front = pareto_front(p4, w, 0, 1, /*collect_all_sets=*/true);
  REQUIRE(front.points.size() == 1);
  CHECK(front.points[0].objective_units == std::vector<long long>{2, 2});
  CHECK(front.points[0].set == vs({1, 3}));
  std::vector<VertexSubset> want{vs({1, 3}), vs({1, 4}), vs({2, 3}),
                                 vs({2, 4})};
  CHECK(front.points[0].all_sets == want);
}

TEST_CASE("single-criterion front is the scalar optimum") {
  Graph p6 = path_graph(6);
  auto w = WeightVectorTable::from_integers({{1}, {1}, {1}, {1}, {1}, {1}});
  auto front = pareto_front(p6, w, 0, 1);
  REQUIRE(front.points.size() == 1);
  CHECK(front.points[0].objective_units == std::vector<long long>{2});
  CHECK(front.points[0].set == vs({2, 5}));
}

TEST_CASE("connectivity level narrows the feasible family") {
  Graph c5 = cycle_graph(5);
  auto w = WeightVectorTable::from_integers(
      {{1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}});
  auto front = pareto_front(c5, w, 2, 1);
  REQUIRE(front.points.size() == 1);
  CHECK(front.points[0].set == VertexSubset::full(5));
  CHECK(front.points[0].objective_units == std::vector<long long>{15, 15});

  auto none = pareto_front(c5, w, 3, 1);
  CHECK(none.status == SolveStatus::Infeasible);
  CHECK(none.graph_connectivity == 2);
  CHECK(none.points.empty());

  auto split = pareto_front(Graph(2, {}), WeightVectorTable::from_integers(
                                              {{1, 1}, {1, 1}}),
                            1, 1);
  CHECK(split.status == SolveStatus::Infeasible);
}

TEST_CASE("fractional weights keep exact per-column scaling") {
  Graph k2 = complete_graph(2);
  auto w = WeightVectorTable::from_text({{"0.5", "2"}, {"1.5", "1"}});
  auto front = pareto_front(k2, w, 0, 1);
  REQUIRE(front.points.size() == 2);
  CHECK(front.points[0].objective_units == std::vector<long long>{5, 2});
  CHECK(front.points[0].objective ==
        std::vector<double>{0.5, 2.0});
  CHECK(front.points[0].set == vs({1}));
  CHECK(front.points[1].objective_units == std::vector<long long>{15, 1});
  CHECK(front.points[1].set == vs({2}));
}

TEST_CASE("inexact weights fall back to doubles") {
  Graph k2 = complete_graph(2);
  auto w = WeightVectorTable::from_text({{"0.1234567"}, {"1"}});
  auto front = pareto_front(k2, w, 0, 1);
  REQUIRE(front.points.size() == 1);
  CHECK(front.points[0].objective_units.empty());
  CHECK(front.points[0].objective[0] == doctest::Approx(0.1234567));
}

TEST_CASE("front matches the reference scan on random instances") {
  DeterministicRng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform_int(3, 9);
    Graph g = gen_gnp_connected(n, 0.45, rng);
    int mu = rng.uniform_int(2, 3);
    std::vector<std::vector<long long>> rows;
    for (int v = 0; v < n; ++v) {
      std::vector<long long> row;
      for (int j = 0; j < mu; ++j) row.push_back(rng.uniform_int(1, 9));
      rows.push_back(std::move(row));
    }
    auto w = WeightVectorTable::from_integers(rows);
    int k = rng.uniform_int(0, 1);
    auto front = pareto_front(g, w, k, 1);
    auto want = oracle_pareto(g, w, k, 1);
    CAPTURE(trial);
    REQUIRE(front.points.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(front.points[i].objective_units == want[i].objective_units);
      CHECK(front.points[i].set == want[i].set);
    }
    // Mutual non-domination of the returned front.
    for (std::size_t i = 0; i < front.points.size(); ++i)
      for (std::size_t j = 0; j < front.points.size(); ++j)
        if (i != j)
          CHECK(!dominates(front.points[i].objective_units,
                           front.points[j].objective_units));
  }
}

TEST_CASE("frontier size cap") {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < 21; ++v) edges.push_back({v, v + 1});
  Graph big(21, edges);
  std::vector<std::vector<long long>> rows(21, {1, 1});
  CHECK_THROWS_AS(pareto_front(big, WeightVectorTable::from_integers(rows), 0, 1),
                  ResourceError);
}
