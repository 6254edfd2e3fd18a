#include "doctest.h"
#include "oracles.hpp"

#include "sc2/corpus.hpp"
#include "sc2/matroid.hpp"
#include "sc2/minor_scan.hpp"

#include <random>

using namespace sc2;

namespace {

std::set<oracle::Support> circuit_set(const Matroid& m) {
  std::set<oracle::Support> out;
  for (auto c : m.circuits()) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

std::vector<std::string> names(std::size_t n, const char* prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Multigraph k4() {
  Multigraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex();
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j, "k" + std::to_string(k++));
  return g;
}

}  // namespace

TEST_CASE("dual matroid circuits are minimal row-space supports over F_3") {
  std::vector<Complex2> small = {tetrahedron(), grid_complex(1, 1, 1), two_wheels_complex()};
  for (std::uint32_t s = 1; s <= 40; ++s) {
    auto c = random_complex(s, 8);
    if (c.num_edges() <= 9) small.push_back(c);
  }
  for (const auto& c : small) {
    if (c.num_edges() > 11) continue;
    auto m = dual_matroid(c);
    auto expect = oracle::row_space_circuits(incidence_matrix(c), c.num_faces(), 3);
    CHECK(circuit_set(m) == expect);
  }
}

TEST_CASE("cycle matroid circuits are graph cycles") {
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    Multigraph g;
    int n = 2 + t % 4;
    for (int i = 0; i < n; ++i) g.add_vertex();
    int m = 1 + t % 9;
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int i = 0; i < m; ++i) g.add_edge(d(rng), d(rng), "g" + std::to_string(i));
    CHECK(circuit_set(cycle_matroid(g)) == oracle::graph_cycles(g));
  }
}

TEST_CASE("rank function axioms on dual matroids") {
  std::mt19937 rng(12);
  for (const auto& [name, c] : standard_corpus()) {
    CAPTURE(name);
    auto m = dual_matroid(c);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 30; ++t) {
      std::vector<int> a, b, u, i;
      for (int e = 0; e < static_cast<int>(m.size()); ++e) {
        bool x = bit(rng), y = bit(rng);
        if (x) a.push_back(e);
        if (y) b.push_back(e);
        if (x || y) u.push_back(e);
        if (x && y) i.push_back(e);
      }
      CHECK(m.rank(a) <= static_cast<int>(a.size()));
      CHECK(m.rank(i) <= m.rank(a));
      CHECK(m.rank(a) + m.rank(b) >= m.rank(u) + m.rank(i));
    }
  }
}

TEST_CASE("duality: circuits of the dual are cocircuits, rank formula") {
  for (const auto& c : {tetrahedron(), octahedron(), grid_complex(2, 1, 1), two_hub_complex()}) {
    auto m = dual_matroid(c);
    auto d = m.dual();
    CHECK(d.rank() == static_cast<int>(m.size()) - m.rank());
    auto cc = m.cocircuits();
    std::set<oracle::Support> co;
    for (auto x : cc) {
      std::sort(x.begin(), x.end());
      co.insert(x);
    }
    CHECK(circuit_set(d) == co);
    CHECK(matroid_equals(d.dual(), m));
  }
}

TEST_CASE("deletion and contraction by circuit definitions") {
  auto m = dual_matroid(grid_complex(2, 1, 1));
  auto all = circuit_set(m);
  for (int e = 0; e < static_cast<int>(m.size()); ++e) {
    auto del = m.minor({e}, {});
    auto con = m.minor({}, {e});
    auto back = [&](const std::set<oracle::Support>& s) {
      // Minor element i corresponds to original i (< e) or i + 1.
      std::set<oracle::Support> out;
      for (const auto& x : s) {
        oracle::Support y;
        for (int i : x) y.push_back(i < e ? i : i + 1);
        out.insert(y);
      }
      return out;
    };
    std::set<oracle::Support> expect_del, with_e_removed;
    for (const auto& c : all) {
      if (!std::count(c.begin(), c.end(), e)) expect_del.insert(c);
      oracle::Support r;
      for (int i : c)
        if (i != e) r.push_back(i);
      if (!r.empty()) with_e_removed.insert(r);
    }
    CHECK(back(circuit_set(del)) == expect_del);
    CHECK(back(circuit_set(con)) == oracle::minimal(with_e_removed));
  }
}

TEST_CASE("field dependence: U24 over F_3 versus F_2") {
  IntRows rows = {{1, 0, 1, 1}, {0, 1, 1, 2}};
  auto m3 = Matroid::from_rows(Field::prime(3), names(4), rows);
  CHECK(circuit_set(m3).size() == 4);  // all 3-subsets
  auto m2 = Matroid::from_rows(Field::prime(2), names(4), rows);
  CHECK(circuit_set(m2) != circuit_set(m3));
  auto u24 = std::find_if(excluded_minors_for_graphic().begin(), excluded_minors_for_graphic().end(),
                          [](const NamedMatroid& n) { return n.name == "U24"; });
  REQUIRE(u24 != excluded_minors_for_graphic().end());
  CHECK(matroid_isomorphic(m3, u24->matroid));
}

TEST_CASE("matroid equality agrees with the exhaustive rank comparison") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> d(-1, 1);
  for (int t = 0; t < 60; ++t) {
    IntRows a(2, IntRow(5)), b(2, IntRow(5));
    for (auto* m : {&a, &b})
      for (auto& r : *m)
        for (auto& x : r) x = d(rng);
    auto ma = Matroid::from_rows(Field::prime(3), names(5), a);
    auto mb = Matroid::from_rows(Field::prime(3), names(5), b);
    CHECK(matroid_equals(ma, mb) == matroid_equals_bruteforce(ma, mb));
    CHECK(matroid_equals(ma, mb) == (circuit_set(ma) == circuit_set(mb)));
  }
  auto relabeled = cycle_matroid(k4());
  auto shuffled = relabeled.restrict_to({5, 4, 3, 2, 1, 0});
  CHECK(matroid_equals(relabeled, shuffled));
}

TEST_CASE("cone over K5: ten loops, not local at the apex") {
  auto c = cone_over_complete_graph(5);
  auto m = dual_matroid(c);
  CHECK(m.size() == 10);
  for (int e = 0; e < 10; ++e) CHECK(m.is_loop(e));
  auto loc = is_local(c);
  CHECK_FALSE(loc.local);
  CHECK(loc.failing_vertices == std::vector<std::string>{"a"});
}

TEST_CASE("locality on the corpus") {
  CHECK(is_local(tetrahedron()).local);
  CHECK(is_local(octahedron()).local);
  CHECK(is_local(grid_complex(2, 2, 2)).local);
  CHECK(is_local(cone_over_complete_graph(4)).local == false);
}

TEST_CASE("link dual matroid of a tetrahedron vertex is U_{1,3}") {
  auto t = tetrahedron();
  auto m = link_dual_matroid(t, 0);
  CHECK(m.size() == 3);
  CHECK(m.rank() == 1);
  CHECK(circuit_set(m).size() == 3);
  for (const auto& c : circuit_set(m)) CHECK(c.size() == 2);
}

TEST_CASE("connectivity of cycle matroids") {
  auto r = connectivity(cycle_matroid(k4()));
  CHECK(r.connected);
  CHECK(r.globally_3connected);
  Multigraph square;
  for (int i = 0; i < 4; ++i) square.add_vertex();
  for (int i = 0; i < 4; ++i) square.add_edge(i, (i + 1) % 4, "c" + std::to_string(i));
  square.add_edge(0, 2, "d");
  auto s = connectivity(cycle_matroid(square));
  CHECK(s.connected);
  CHECK_FALSE(s.globally_3connected);
  CHECK_FALSE(s.two_separations.empty());
}

TEST_CASE("excluded minor scan") {
  CHECK(excluded_minor_scan(cycle_matroid(k4())).graphic_consistent);
  CHECK(excluded_minors_for_graphic().size() == 5);
  for (const auto& n : excluded_minors_for_graphic()) {
    CAPTURE(n.name);
    auto v = excluded_minor_scan(n.matroid);
    CHECK_FALSE(v.graphic_consistent);
    REQUIRE(v.witness);
    CHECK(v.witness->name == n.name);
  }
}

TEST_CASE("size guard on exhaustive routines") {
  Multigraph g;
  for (int i = 0; i < 2; ++i) g.add_vertex();
  for (int i = 0; i < 30; ++i) g.add_edge(0, 1, "p" + std::to_string(i));
  CHECK_THROWS_AS(cycle_matroid(g).circuits(), SizeGuardError);
}

TEST_CASE("shrinking and exhaustive scan agree on witnesses") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-1, 1);
  int non_graphic = 0;
  for (int t = 0; t < 120; ++t) {
    std::size_t r = 2 + t % 2, n = 4 + t % 4;
    IntRows a(r, IntRow(n));
    for (auto& row : a)
      for (auto& x : row) x = d(rng);
    auto m = Matroid::from_rows(Field::prime(3), names(n), a);
    auto scan = excluded_minor_scan(m);
    auto shrink = excluded_minor_by_shrinking(m);
    CHECK(scan.graphic_consistent == !shrink.has_value());
    if (!shrink) continue;
    ++non_graphic;
    auto minor = m.minor_ids(shrink->deleted, shrink->contracted);
    for (const auto& target : excluded_minors_for_graphic())
      if (target.name == shrink->name) CHECK(matroid_isomorphic(minor, target.matroid));
  }
  CHECK(non_graphic > 0);
}
