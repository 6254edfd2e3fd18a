#include "doctest.h"
#include "oracles.hpp"

#include "sc2/corpus.hpp"
#include "sc2/decide.hpp"
#include "sc2/embedding.hpp"
#include "sc2/matroid.hpp"
#include "sc2/realize.hpp"

#include <random>

using namespace sc2;

namespace {

Certificate certificate_for(const Complex2& c) {
  auto rs = realize_graph(dual_matroid(c), RealizeMode::First);
  REQUIRE(rs.size() == 1);
  auto cert = certificate_from_realization(c, rs.front().graph);
  REQUIRE(cert.has_value());
  return *cert;
}

RotationSystem shuffled_rotation(const Complex2& c, std::mt19937& rng) {
  RotationSystem s;
  for (int e = 0; e < static_cast<int>(c.num_edges()); ++e) {
    auto t = traversals_of_edge(c, e);
    std::shuffle(t.begin(), t.end(), rng);
    s.sigma.push_back(t);
  }
  return s;
}

}  // namespace

TEST_CASE("rotation systems must list each traversal once") {
  auto t = tetrahedron();
  std::mt19937 rng(1);
  auto s = shuffled_rotation(t, rng);
  CHECK_NOTHROW(validate_rotation_system(t, s));
  auto missing = s;
  missing.sigma[0].pop_back();
  CHECK_THROWS_AS(validate_rotation_system(t, missing), InputError);
  auto doubled = s;
  doubled.sigma[0].push_back(doubled.sigma[0].front());
  CHECK_THROWS_AS(validate_rotation_system(t, doubled), InputError);
  auto wrong_edge = s;
  std::swap(wrong_edge.sigma[0], wrong_edge.sigma[1]);
  CHECK_THROWS_AS(validate_rotation_system(t, wrong_edge), InputError);
}

TEST_CASE("Kirchhoff's law modulo 3") {
  Multigraph tri;
  for (int i = 0; i < 3; ++i) tri.add_vertex();
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  CHECK(is_3flow(tri, {1, 1, 1}));
  CHECK(is_3flow(tri, {2, 2, 2}));
  CHECK_FALSE(is_3flow(tri, {1, 1, 2}));
  CHECK(is_3flow(tri, {0, 0, 0}));
}

TEST_CASE("3-flow orientation makes every incidence row a flow") {
  for (const auto& c : {tetrahedron(), octahedron(), grid_complex(2, 2, 1), grid_complex(2, 2, 2)}) {
    auto rs = realize_graph(dual_matroid(c), RealizeMode::First);
    REQUIRE(rs.size() == 1);
    auto rows = incidence_rows_on_graph(c, rs.front().graph);
    auto oriented = orient_for_3flows(rs.front().graph, rows);
    CHECK(oriented.edges.size() == rs.front().graph.edges.size());
    for (const auto& row : rows) CHECK(is_3flow(oriented, row));
  }
}

TEST_CASE("certificate link surfaces are spheres") {
  for (const auto& c : {tetrahedron(), octahedron(), grid_complex(2, 2, 1)}) {
    auto cert = certificate_for(c);
    auto p = is_planar_rotation_system(c, cert.rotation);
    CHECK(p.planar);
    REQUIRE(p.vertices.size() == c.num_vertices());
    for (const auto& v : p.vertices) {
      const auto& r = v.report;
      CHECK(r.vertices - r.edges + r.faces == 2 * r.components);
      CHECK(r.euler_genus == 0);
      CHECK(r.is_sphere);
    }
  }
}

TEST_CASE("random rotation systems give orientable link surfaces") {
  std::mt19937 rng(17);
  for (const auto& c : {grid_complex(2, 2, 1), grid_complex(2, 2, 2), two_hub_complex(), two_wheels_complex()}) {
    for (int t = 0; t < 20; ++t) {
      auto s = shuffled_rotation(c, rng);
      auto p = is_planar_rotation_system(c, s);
      bool all_zero = true;
      for (const auto& v : p.vertices) {
        const auto& r = v.report;
        CHECK(r.euler_genus >= 0);
        CHECK(r.euler_genus % 2 == 0);
        CHECK(r.euler_genus == 2 * r.components - (r.vertices - r.edges + r.faces));
        CHECK(r.edges == static_cast<int>(link_graph(c, v.vertex).links.size()));
        all_zero = all_zero && r.euler_genus == 0;
      }
      CHECK(p.planar == all_zero);
    }
  }
}

TEST_CASE("a crossed rotation around a four-face edge is not planar") {
  auto c = grid_complex(2, 2, 1);
  auto cert = certificate_for(c);
  int e = -1;
  for (int i = 0; i < static_cast<int>(c.num_edges()); ++i)
    if (cert.rotation.sigma[i].size() == 4) e = i;
  REQUIRE(e >= 0);
  auto crossed = cert.rotation;
  std::swap(crossed.sigma[e][1], crossed.sigma[e][2]);
  CHECK_FALSE(is_planar_rotation_system(c, crossed).planar);
}

TEST_CASE("dual graph of a certificate realizes the dual matroid") {
  for (const auto& c : {tetrahedron(), octahedron(), grid_complex(2, 2, 1), grid_complex(2, 2, 2)}) {
    auto cert = certificate_for(c);
    auto g = dual_graph_of_rotation(c, cert.rotation);
    CHECK(g.edges.size() == c.num_faces());
    CHECK(matroid_equals(cycle_matroid(g), dual_matroid(c)));
    if (c.num_faces() <= 16)
      CHECK(oracle::graph_cycles(without_isolated_vertices(g)).size() ==
            dual_matroid(c).circuits().size());
  }
  CHECK(certificate_for(tetrahedron()).dual_graph.n == 2);
  CHECK(certificate_for(grid_complex(2, 2, 2)).dual_graph.n == 9);
}

TEST_CASE("rotation read back from the oriented graph") {
  auto c = octahedron();
  auto rs = realize_graph(dual_matroid(c), RealizeMode::First);
  auto oriented = orient_for_3flows(rs.front().graph, incidence_rows_on_graph(c, rs.front().graph));
  auto s = rotation_system_from_graph(c, oriented);
  CHECK_NOTHROW(validate_rotation_system(c, s));
  CHECK(labelled_canonical_form(dual_graph_of_rotation(c, s)) == labelled_canonical_form(oriented));
}

TEST_CASE("constraint sets") {
  auto t = tetrahedron();
  auto ks = constraint_sets(t);
  int vertex = 0, edge = 0;
  for (const auto& k : ks) {
    if (k.is_vertex) {
      ++vertex;
      CHECK(k.faces.size() == 3);
    } else {
      ++edge;
      CHECK(k.faces.size() == 2);
    }
    CHECK(k.trivial == (k.faces.size() <= 1));
  }
  CHECK(vertex == 4);
  CHECK(edge == 6);
  CHECK(violated_constraints(ks, certificate_for(t).dual_graph).empty());

  // A graph in which the two faces at some edge do not meet.
  Multigraph apart;
  for (int i = 0; i < 8; ++i) apart.add_vertex();
  for (int f = 0; f < 4; ++f) apart.add_edge(2 * f, 2 * f + 1, t.faces()[f].id);
  CHECK(violated_constraints(ks, apart).size() == ks.size());
}

TEST_CASE("opening an edge of a tetrahedron") {
  auto c = tetrahedron();
  auto cert = certificate_for(c);
  const std::string e = c.edges()[0].id;
  auto opened = open_edge(c, e, {cert.rotation.sigma[0].front()}, cert.rotation);
  CHECK(opened.complex.num_edges() == c.num_edges() + 1);
  CHECK(opened.complex.has_edge(e + "·a"));
  CHECK(opened.complex.has_edge(e + "·b"));
  CHECK_NOTHROW(validate_rotation_system(opened.complex, opened.rotation));
  CHECK(is_planar_rotation_system(opened.complex, opened.rotation).planar);
  // The links at both ends become paths, which are still connected.
  CHECK(local_connectivity_profile(opened.complex).locally_connected);
  CHECK_THROWS(open_edge(c, e, cert.rotation.sigma[0], cert.rotation));
  CHECK_THROWS(open_edge(c, e, {}, cert.rotation));
}
