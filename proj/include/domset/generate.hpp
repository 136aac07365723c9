#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/msest.hpp"

namespace domset {

// Seeded generator with fully pinned-down sampling, so the same seed yields
// the same instance on every platform and standard library.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Inclusive bounds; rejection sampling over a power-of-two window.
  int uniform_int(int lo, int hi);

  // [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Instance with a planted feasible core and the (k, m) requirement the core
// is built to satisfy.
struct Fixture {
  std::string family;
  Graph graph;
  VertexSubset core;
  int k = 1;
  int m = 1;
};

// Families, each a core of `core_size` vertices with `leaves` extra vertices
// hung off every core vertex:
//   clique-backbone  complete core, core_size >= 4       (k=3, m=1)
//   tree-backbone    tree core, vertex i under i/2       (k=1, m=1)
//   ring-backbone    cycle core, core_size >= 3          (k=2, m=1)
//   ring-3dom        cycle core; each leaf tied to three consecutive core
//                    vertices, so the core triple-dominates it  (k=2, m=3)
std::vector<std::string> fixture_families();
Fixture make_fixture(const std::string& family, int core_size, int leaves);

// Each vertex pair becomes an edge independently with probability p.
Graph gen_gnp(int n, double p, DeterministicRng& rng);

// Resamples gen_gnp until the result is connected.
Graph gen_gnp_connected(int n, double p, DeterministicRng& rng,
                        int max_tries = 1000);

// Random points in the unit square, edge when distance <= radius.
Graph gen_unit_disk(int n, double radius, DeterministicRng& rng);

// n rows of mu integer weights drawn uniformly from [lo, hi], as text.
std::vector<std::vector<std::string>> random_integer_weights(
    int n, int mu, int lo, int hi, DeterministicRng& rng);

// One uniformly chosen valid estimate per vertex.
EstimateTable random_estimates(int n, int l, int eta, DeterministicRng& rng);

}  // namespace domset
