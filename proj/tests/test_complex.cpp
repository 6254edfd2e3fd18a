#include "doctest.h"
#include "oracles.hpp"

#include "sc2/complex.hpp"
#include "sc2/corpus.hpp"

using namespace sc2;

namespace {

ComplexSpec triangle_spec() {
  ComplexSpec s;
  s.vertices = {"a", "b", "c"};
  s.edges = {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}};
  s.faces = {{"t", {{"ab", 1}, {"bc", 1}, {"ca", 1}}}};
  return s;
}

}  // namespace

TEST_CASE("valid specs build and round-trip through spec()") {
  Complex2 c(triangle_spec());
  CHECK(c.num_vertices() == 3);
  CHECK(c.num_edges() == 3);
  CHECK(c.num_faces() == 1);
  CHECK(c.simplicial());
  Complex2 again(c.spec());
  CHECK(again.spec().faces == c.spec().faces);
}

TEST_CASE("invalid specs are rejected") {
  auto s = triangle_spec();
  SUBCASE("open walk") {
    s.faces[0].second[2].second = -1;
    CHECK_THROWS_AS(Complex2{s}, InputError);
  }
  SUBCASE("unknown edge") {
    s.faces[0].second[0].first = "zz";
    CHECK_THROWS_AS(Complex2{s}, InputError);
  }
  SUBCASE("bad sign") {
    s.faces[0].second[0].second = 2;
    CHECK_THROWS_AS(Complex2{s}, InputError);
  }
  SUBCASE("duplicate vertex") {
    s.vertices.push_back("a");
    CHECK_THROWS_AS(Complex2{s}, InputError);
  }
  SUBCASE("edge with unknown endpoint") {
    std::get<2>(s.edges[0]) = "q";
    CHECK_THROWS_AS(Complex2{s}, InputError);
  }
}

TEST_CASE("corpus cell counts") {
  auto counts = [](const Complex2& c) {
    return std::array<std::size_t, 3>{c.num_vertices(), c.num_edges(), c.num_faces()};
  };
  CHECK(counts(tetrahedron()) == std::array<std::size_t, 3>{4, 6, 4});
  CHECK(counts(octahedron()) == std::array<std::size_t, 3>{6, 12, 8});
  CHECK(counts(cone_over_complete_graph(5)) == std::array<std::size_t, 3>{6, 15, 10});
  CHECK(counts(torus()) == std::array<std::size_t, 3>{7, 21, 14});
  for (auto [a, b, c] : {std::array<int, 3>{1, 1, 1}, {2, 2, 1}, {4, 2, 1}, {2, 2, 2}, {3, 1, 2}}) {
    std::size_t v = (a + 1) * (b + 1) * (c + 1);
    std::size_t e = a * (b + 1) * (c + 1) + (a + 1) * b * (c + 1) + (a + 1) * (b + 1) * c;
    std::size_t f = a * b * (c + 1) + a * (b + 1) * c + (a + 1) * b * c;
    CHECK(counts(grid_complex(a, b, c)) == std::array<std::size_t, 3>{v, e, f});
  }
  CHECK(counts(grid_complex(4, 2, 1)) == std::array<std::size_t, 3>{30, 59, 38});
}

TEST_CASE("corpus generation is deterministic") {
  auto a = standard_corpus(), b = standard_corpus();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second.spec().faces == b[i].second.spec().faces);
    CHECK(a[i].second.spec().edges == b[i].second.spec().edges);
  }
  CHECK(random_complex(42).spec().faces == random_complex(42).spec().faces);
}

TEST_CASE("link graphs") {
  auto t = tetrahedron();
  for (std::size_t v = 0; v < t.num_vertices(); ++v) {
    auto l = link_graph(t, static_cast<int>(v));
    CHECK(l.nodes.size() == 3);
    CHECK(l.links.size() == 3);
  }
  auto o = octahedron();
  auto l = link_graph(o, "v0");
  CHECK(l.nodes.size() == 4);
  CHECK(l.links.size() == 4);
  // Every corner's nodes carry the traversals it joins.
  for (const auto& k : l.links) {
    const auto& walk = o.faces()[k.face].walk;
    CHECK(l.nodes[k.in].edge == walk[k.pos].edge);
    CHECK(l.nodes[k.out].edge == walk[(k.pos + 1) % walk.size()].edge);
  }
}

TEST_CASE("link node degrees add up to traversal counts") {
  for (const auto& [name, c] : standard_corpus()) {
    CAPTURE(name);
    std::size_t corners = 0, traversals = 0;
    for (std::size_t v = 0; v < c.num_vertices(); ++v) corners += link_graph(c, static_cast<int>(v)).links.size();
    for (const auto& f : c.faces()) traversals += f.walk.size();
    CHECK(corners == traversals);
  }
}

TEST_CASE("homology of corpus complexes") {
  CHECK(homology_check(tetrahedron()).nullhomologous);
  CHECK(homology_check(octahedron()).nullhomologous);
  CHECK(homology_check(grid_complex(2, 2, 2)).nullhomologous);
  CHECK(homology_check(cone_over_complete_graph(5)).nullhomologous);
  auto t = homology_check(torus());
  CHECK_FALSE(t.nullhomologous);
  CHECK(t.h1_free_rank == 2);
  CHECK(t.h1_torsion.empty());
  CHECK(oracle::euler_characteristic(torus()) == 0);
}

TEST_CASE("projective plane has Z/2 torsion, invisible mod 3") {
  // Six-vertex triangulation of RP^2.
  auto rp2 = simplicial_from_triangles(6, {{0, 1, 3}, {1, 2, 3}, {0, 2, 4}, {1, 2, 4}, {0, 3, 4}, {1, 4, 5},
                                           {2, 3, 5}, {0, 2, 5}, {0, 1, 5}, {3, 4, 5}});
  // Sanity on the input: 6 - 15 + 10 = 1.
  REQUIRE(oracle::euler_characteristic(rp2) == 1);
  auto h = homology_check(rp2);
  CHECK_FALSE(h.nullhomologous);
  CHECK(h.h1_free_rank == 0);
  CHECK(h.h1_torsion == std::vector<BigInt>{2});
  CHECK(cycles_generated_mod_p(rp2, 3));
  CHECK_FALSE(cycles_generated_mod_p(rp2, 2));
}

TEST_CASE("homology is invariant under flipping edges and reversing faces") {
  for (std::uint32_t seed = 1; seed <= 30; ++seed) {
    auto c = random_complex(seed);
    auto h = homology_check(c);
    auto flipped = flip_edge(c, 0);
    auto reversed = reverse_face(c, 0);
    CHECK(homology_check(flipped).h1_free_rank == h.h1_free_rank);
    CHECK(homology_check(reversed).h1_torsion == h.h1_torsion);
  }
}

TEST_CASE("local connectivity profile") {
  auto p = local_connectivity_profile(tetrahedron());
  CHECK(p.locally_connected);
  CHECK(p.locally_2connected);
  auto f = local_connectivity_profile(two_wheels_complex());
  // Two wheels sharing an edge: the links at the hubs stay connected.
  CHECK(f.locally_connected);
  auto g = local_connectivity_profile(grid_complex(2, 1, 1));
  CHECK(g.locally_connected);
}

TEST_CASE("identifying cells keeps the first id") {
  auto g = grid_complex(2, 1, 1);
  auto pairs = grid_edge_pairs(g);
  REQUIRE_FALSE(pairs.pairs.empty());
  auto [a, b] = pairs.pairs.front();
  auto q = identify_edge_pair(g, a, b);
  CHECK(q.num_edges() == g.num_edges() - 1);
  CHECK(q.num_vertices() == g.num_vertices() - 2);
  CHECK(q.num_faces() == g.num_faces());
  CHECK(q.has_edge(a));
  CHECK_FALSE(q.has_edge(b));
}

TEST_CASE("barycentric simplicialization preserves homology") {
  for (const auto& c : {torus(), two_hub_complex(), two_wheels_complex()}) {
    auto s = barycentric_simplicialization(c);
    CHECK(s.simplicial());
    CHECK(homology_check(s).h1_free_rank == homology_check(c).h1_free_rank);
    CHECK(oracle::euler_characteristic(s) == oracle::euler_characteristic(c));
  }
}
