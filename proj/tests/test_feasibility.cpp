#include <bit>
#include <vector>

#include "doctest.h"
#include "domset/errors.hpp"
#include "domset/feasibility.hpp"
#include "domset/generate.hpp"
#include "domset/graph.hpp"
#include "test_support.hpp"

using namespace domset;
using namespace domset::test;

namespace {

// Reference vertex connectivity of G[b], written independently of the
// library: smallest removal set whose deletion disconnects the remaining
// vertices; an induced complete graph on t vertices yields t - 1.
int reference_connectivity(const Graph& g, const std::vector<int>& b) {
  int t = static_cast<int>(b.size());
  if (t <= 1) return 0;
  unsigned full = (1u << t) - 1;
  auto connected_within = [&](unsigned keep) {
    int start = -1, want = 0;
    for (int i = 0; i < t; ++i)
      if (keep & (1u << i)) {
        if (start < 0) start = i;
        ++want;
      }
    if (want <= 1) return true;
    std::vector<char> seen(t, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int got = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < t; ++j)
        if ((keep & (1u << j)) && !seen[j] && g.has_edge(b[x], b[j])) {
          seen[j] = 1;
          ++got;
          stack.push_back(j);
        }
    }
    return got == want;
  };
  if (!connected_within(full)) return 0;
  for (int s = 1; s <= t - 2; ++s)
    for (unsigned rem = 1; rem <= full; ++rem)
      if (std::popcount(rem) == s && !connected_within(full & ~rem)) return s;
  return t - 1;
}

Graph petersen() {
  return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                    {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                    {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
}

}  // namespace

TEST_CASE("domination predicates on fixed graphs") {
  Graph p6 = path_graph(6);
  CHECK(is_dominating(p6, vs({2, 5})));
  CHECK(!is_dominating(p6, vs({1, 2})));
  CHECK(is_dominating(p6, VertexSubset::full(6)));

  Graph star = star_graph(5);
  CHECK(is_dominating(star, vs({1})));
  CHECK(!is_dominating(star, vs({2})));
  // All leaves dominate: the only outside vertex is the center.
  CHECK(is_dominating(star, vs({2, 3, 4, 5})));
}

TEST_CASE("m-domination counts distinct dominators") {
  Graph c5 = cycle_graph(5);
  CHECK(is_m_dominating(c5, vs({1, 3}), 1));
  // Vertex 2 sees both, but 4 and 5 each see only one.
  CHECK(!is_m_dominating(c5, vs({1, 3}), 2));
  CHECK(is_m_dominating(c5, vs({1, 2, 3, 4}), 2));

  Graph k4 = complete_graph(4);
  CHECK(is_m_dominating(k4, vs({1, 2}), 2));
  CHECK(!is_m_dominating(k4, vs({1, 2}), 3));
  CHECK(is_m_dominating(k4, vs({1, 2, 3}), 3));

  CHECK_THROWS_AS(is_m_dominating(c5, vs({1}), 0), InputError);
}

TEST_CASE("m = 1 domination coincides with plain domination") {
  DeterministicRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform_int(2, 9);
    Graph g = gen_gnp(n, 0.4, rng);
    std::vector<int> ids;
    for (int v = 1; v <= n; ++v)
      if (rng.uniform_int(0, 1) == 1) ids.push_back(v);
    if (ids.empty()) ids.push_back(rng.uniform_int(1, n));
    VertexSubset b(ids);
    CHECK(is_dominating(g, b) == is_m_dominating(g, b, 1));
  }
}

TEST_CASE("connected subset checks") {
  Graph p6 = path_graph(6);
  CHECK(is_connected_subset(p6, vs({3})));
  CHECK(is_connected_subset(p6, vs({2, 3, 4})));
  CHECK(!is_connected_subset(p6, vs({2, 4})));
  CHECK_THROWS_AS(is_connected_subset(p6, VertexSubset()), InputError);
}

TEST_CASE("subset connectivity on fixed graphs") {
  Graph k4 = complete_graph(4);
  CHECK(subset_connectivity(k4, VertexSubset::full(4)) == 3);
  CHECK(subset_connectivity(k4, vs({1, 2, 3})) == 2);
  CHECK(subset_connectivity(k4, vs({1, 2})) == 1);
  CHECK(subset_connectivity(k4, vs({1})) == 0);

  Graph c5 = cycle_graph(5);
  CHECK(subset_connectivity(c5, VertexSubset::full(5)) == 2);
  CHECK(subset_connectivity(c5, vs({1, 2, 3})) == 1);
  CHECK(subset_connectivity(c5, vs({1, 3})) == 0);  // disconnected

  CHECK(subset_connectivity(petersen(), VertexSubset::full(10)) == 3);
}

TEST_CASE("subset connectivity matches the reference on random subsets") {
  DeterministicRng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    int n = rng.uniform_int(2, 9);
    double p = 0.25 + 0.25 * rng.uniform_int(0, 2);
    Graph g = gen_gnp(n, p, rng);
    std::vector<int> ids;
    for (int v = 1; v <= n; ++v)
      if (rng.uniform_int(0, 2) > 0) ids.push_back(v);
    if (ids.empty()) ids.push_back(1);
    CAPTURE(trial);
    CHECK(subset_connectivity(g, VertexSubset(ids)) ==
          reference_connectivity(g, ids));
  }
}

TEST_CASE("connectivity rule thresholds") {
  Graph c5 = cycle_graph(5);
  // Level 0 asks nothing, even of a disconnected pair.
  CHECK(meets_connectivity_rule(c5, vs({1, 3}), 0));
  CHECK(meets_connectivity_rule(c5, vs({1}), 1));
  CHECK(!meets_connectivity_rule(c5, vs({1, 3}), 1));
  CHECK(!meets_connectivity_rule(c5, vs({1}), 2));
  CHECK(meets_connectivity_rule(c5, VertexSubset::full(5), 2));
  CHECK(!meets_connectivity_rule(c5, VertexSubset::full(5), 3));

  // A complete graph on k vertices has connectivity k - 1, so it fails
  // level k: {1,2} in K4 passes level 1 only.
  Graph k4 = complete_graph(4);
  CHECK(meets_connectivity_rule(k4, vs({1, 2}), 1));
  CHECK(!meets_connectivity_rule(k4, vs({1, 2}), 2));
  CHECK(meets_connectivity_rule(k4, vs({1, 2, 3}), 2));
  CHECK(meets_connectivity_rule(k4, VertexSubset::full(4), 3));
}

TEST_CASE("certificates carry the failing details") {
  Graph c5 = cycle_graph(5);

  auto good = check_feasible(c5, vs({1, 2, 3}), 1, 1);
  CHECK(good.feasible);
  CHECK(good.dominating);
  CHECK(good.m_dominating);
  CHECK(good.connected);
  CHECK(good.connectivity == 1);
  CHECK(good.violations.empty());

  auto weak = check_feasible(c5, vs({1, 2, 3}), 2, 1);
  CHECK(!weak.feasible);
  CHECK(weak.m_dominating);
  REQUIRE(weak.violations.size() == 1);
  CHECK(weak.violations[0] ==
        Violation{0, "induced connectivity 1 below required 2"});

  auto split = check_feasible(path_graph(6), vs({2, 5}), 1, 1);
  CHECK(!split.feasible);
  CHECK(split.dominating);
  CHECK(!split.connected);
  REQUIRE(split.violations.size() == 1);
  CHECK(split.violations[0] == Violation{5, "set induces 2 components"});

  auto thin = check_feasible(c5, vs({1, 3}), 0, 2);
  CHECK(!thin.feasible);
  CHECK(thin.dominating);
  CHECK(!thin.m_dominating);
  REQUIRE(thin.violations.size() == 2);
  CHECK(thin.violations[0] ==
        Violation{4, "adjacent to 1 of 2 required dominators"});
  CHECK(thin.violations[1] ==
        Violation{5, "adjacent to 1 of 2 required dominators"});

  // A dominating singleton, so the size shortfall is the only violation.
  auto lone = check_feasible(star_graph(5), vs({1}), 2, 1);
  CHECK(!lone.feasible);
  CHECK(lone.dominating);
  REQUIRE(lone.violations.size() == 1);
  CHECK(lone.violations[0] ==
        Violation{0, "connectivity level 2 requires at least 2 vertices"});

  // Level 0 certifies the domination side only.
  auto loose = check_feasible(path_graph(6), vs({2, 5}), 0, 1);
  CHECK(loose.feasible);
  CHECK(!loose.connected);
}

TEST_CASE("certificate input validation") {
  Graph c5 = cycle_graph(5);
  CHECK_THROWS_AS(check_feasible(c5, VertexSubset(), 1, 1), InputError);
  CHECK_THROWS_AS(check_feasible(c5, vs({1}), -1, 1), InputError);
  CHECK_THROWS_AS(check_feasible(c5, vs({1}), 1, 0), InputError);
  CHECK_THROWS_AS(check_feasible(c5, vs({6}), 1, 1), InputError);
}
