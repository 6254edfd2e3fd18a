#include "doctest.h"
#include "oracles.hpp"

#include "sc2/matroid.hpp"
#include "sc2/minor_scan.hpp"
#include "sc2/realize.hpp"

#include <random>

using namespace sc2;

namespace {

Multigraph complete(int n, const char* prefix = "k") {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, prefix + std::to_string(k++));
  return g;
}

/// Bond matroid: circuits are minimal edge cuts.
Matroid bond_matroid(const Multigraph& g) {
  IntRows inc(g.n, IntRow(g.edges.size(), 0));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (u == v) continue;
    inc[u][i] += 1;
    inc[v][i] -= 1;
  }
  return Matroid::from_rows(Field::prime(3), g.labels, inc);
}

Multigraph random_graph(std::mt19937& rng, int n, int m) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  std::uniform_int_distribution<int> d(0, n - 1);
  for (int i = 0; i < m; ++i) g.add_edge(d(rng), d(rng), "g" + std::to_string(i));
  return g;
}

}  // namespace

TEST_CASE("realizing a cycle matroid gives back the same matroid") {
  std::mt19937 rng(8);
  for (int t = 0; t < 80; ++t) {
    auto g = random_graph(rng, 2 + t % 6, 1 + t % 12);
    auto m = cycle_matroid(g);
    auto rs = realize_graph(m, RealizeMode::First);
    REQUIRE(rs.size() == 1);
    CHECK(matroid_equals(cycle_matroid(rs.front().graph), m));
    CHECK(is_graphic(m));
  }
}

TEST_CASE("every enumerated realization has the same cycle matroid") {
  std::mt19937 rng(19);
  for (int t = 0; t < 25; ++t) {
    auto g = random_graph(rng, 4 + t % 2, 5 + t % 4);
    auto m = cycle_matroid(g);
    auto rs = realize_graph(m, RealizeMode::All);
    REQUIRE_FALSE(rs.empty());
    for (const auto& r : rs) CHECK(matroid_equals(cycle_matroid(r.graph), m));
  }
}

TEST_CASE("3-connected graphs have a unique realization up to isomorphism") {
  for (int n : {4, 5}) {
    auto g = complete(n);
    auto rs = realize_graph(cycle_matroid(g), RealizeMode::All);
    REQUIRE_FALSE(rs.empty());
    for (const auto& r : rs) CHECK(isomorphic(without_isolated_vertices(r.graph), g));
  }
}

TEST_CASE("Whitney twist gives non-isomorphic realizations") {
  // Two sides glued at {u, v}; twisting one side moves degree from v to u.
  Multigraph g;
  for (int i = 0; i < 6; ++i) g.add_vertex();
  const int u = 0, v = 1, a = 2, b = 3, c = 4, d = 5;
  g.add_edge(u, a, "ua");
  g.add_edge(a, v, "av");
  g.add_edge(a, b, "ab");
  g.add_edge(b, v, "bv");
  g.add_edge(u, c, "uc");
  g.add_edge(c, v, "cv");
  g.add_edge(c, d, "cd");
  g.add_edge(d, u, "du");
  auto rs = realize_graph(cycle_matroid(g), RealizeMode::All);
  CHECK(rs.size() >= 2);
  bool non_iso = false;
  for (const auto& r : rs) non_iso = non_iso || !isomorphic(without_isolated_vertices(r.graph), g);
  CHECK(non_iso);
}

TEST_CASE("bond matroids: graphic iff the graph is planar") {
  CHECK(is_graphic(bond_matroid(complete(4))));
  CHECK_FALSE(is_graphic(bond_matroid(complete(5))));
  Multigraph k33;
  for (int i = 0; i < 6; ++i) k33.add_vertex();
  int k = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j, "b" + std::to_string(k++));
  CHECK_FALSE(is_graphic(bond_matroid(k33)));
  CHECK(is_graphic(cycle_matroid(k33)));
}

TEST_CASE("excluded minors are not graphic") {
  for (const auto& n : excluded_minors_for_graphic()) {
    CAPTURE(n.name);
    CHECK_FALSE(is_graphic(n.matroid));
    CHECK(realize_graph(n.matroid, RealizeMode::All).empty());
  }
}

TEST_CASE("loops and coloops realize as loops and bridges") {
  IntRows rows = {{1, 0, 0}, {0, 0, 0}};
  // Row-support convention: element 0 is a circuit on its own (a loop);
  // elements 1 and 2 lie in no circuit (coloops).
  auto m = Matroid::from_rows(Field::prime(3), {"l", "c1", "c2"}, rows);
  auto rs = realize_graph(m, RealizeMode::First);
  REQUIRE(rs.size() == 1);
  const auto& g = rs.front().graph;
  int li = g.label_index("l");
  CHECK(g.edges[li].first == g.edges[li].second);
  CHECK(oracle::graph_cycles(g).size() == 1);
}
