#include "doctest.h"

#include "sc2/corpus.hpp"
#include "sc2/decide.hpp"
#include "sc2/matroid.hpp"
#include "sc2/minor_scan.hpp"

using namespace sc2;

namespace {

DecideOptions asserted() {
  DecideOptions o;
  o.simply_connected_asserted = true;
  return o;
}

}  // namespace

TEST_CASE("embeddable corpus members carry self-validating certificates") {
  for (const auto& c : {tetrahedron(), octahedron(), grid_complex(1, 1, 1), grid_complex(2, 2, 1),
                        grid_complex(2, 2, 2), grid_complex(4, 2, 1)}) {
    auto v = decide_embeddability(c, asserted());
    CHECK(v.status == Status::Embeddable);
    REQUIRE(v.certificate.has_value());
    auto check = check_certificate(c, *v.certificate);
    CHECK_MESSAGE(check.valid, check.failure);
    CHECK_FALSE(v.outside_hypotheses);
  }
}

TEST_CASE("inconclusive cases name the missing hypothesis") {
  auto cone = decide_whitney(cone_over_complete_graph(5), asserted());
  CHECK(cone.status == Status::Inconclusive);
  CHECK(cone.reason == "dual matroid not local");
  auto torus_v = decide_whitney(torus(), asserted());
  CHECK(torus_v.status == Status::Inconclusive);
  CHECK(torus_v.reason == "complex is not nullhomologous");
  auto unasserted = decide_whitney(tetrahedron(), DecideOptions{});
  CHECK(unasserted.status == Status::Inconclusive);
  CHECK(unasserted.reason == "simple connectivity not asserted");
  auto split_reason = decide_embeddability(cone_over_complete_graph(5), asserted());
  CHECK(split_reason.status == Status::Inconclusive);
  CHECK(split_reason.reason == "split complex: dual matroid not local");
}

TEST_CASE("the obstruction family is not embeddable, with a witness") {
  for (int n = 3; n <= 5; ++n) {
    for (auto mode : {AnMode::Adjusted, AnMode::Literal}) {
      CAPTURE(n);
      auto v = decide_embeddability(generate_An(n, mode), asserted());
      CHECK(v.status == Status::NotEmbeddable);
      CHECK_FALSE(v.violated.empty());
    }
  }
}

TEST_CASE("a non-graphic dual matroid yields an excluded-minor witness") {
  // 2-skeleton of the 5-simplex: simply connected, local, not graphic.
  std::vector<std::array<int, 3>> tri;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) tri.push_back({a, b, c});
  auto c = simplicial_from_triangles(6, tri);
  auto v = decide_embeddability(c, asserted());
  CHECK(v.status == Status::NotEmbeddable);
  REQUIRE(v.minor_witness.has_value());
  auto minor = dual_matroid(c).minor_ids(v.minor_witness->deleted, v.minor_witness->contracted);
  bool matches = false;
  for (const auto& n : excluded_minors_for_graphic())
    if (n.name == v.minor_witness->name) matches = matroid_isomorphic(minor, n.matroid);
  CHECK(matches);

  // The 2-skeleton of the 4-simplex embeds (cone a tetrahedron's edges to
  // an interior point).
  tri.clear();
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c2 = b + 1; c2 < 5; ++c2) tri.push_back({a, b, c2});
  CHECK(decide_embeddability(simplicial_from_triangles(5, tri), asserted()).status == Status::Embeddable);
}

TEST_CASE("certificate checks reject tampering") {
  auto c = grid_complex(2, 2, 1);
  auto v = decide_embeddability(c, asserted());
  REQUIRE(v.certificate.has_value());
  SUBCASE("crossed rotation") {
    auto cert = *v.certificate;
    for (auto& s : cert.rotation.sigma)
      if (s.size() == 4) {
        std::swap(s[1], s[2]);
        break;
      }
    CHECK_FALSE(check_certificate(c, cert).valid);
  }
  SUBCASE("wrong dual graph") {
    auto cert = *v.certificate;
    std::swap(cert.dual_graph.labels[0], cert.dual_graph.labels[1]);
    if (labelled_canonical_form(cert.dual_graph) != labelled_canonical_form(v.certificate->dual_graph))
      CHECK_FALSE(check_certificate(c, cert).valid);
  }
  SUBCASE("different complex") {
    CHECK_FALSE(check_certificate(grid_complex(2, 1, 1), *v.certificate).valid);
  }
}

TEST_CASE("global 3-connectivity") {
  CHECK_FALSE(globally_3connected(dual_matroid(tetrahedron()), nullptr));
  auto m = dual_matroid(generate_An(4, AnMode::Unidentified));
  CHECK_FALSE(globally_3connected(m, nullptr));
}

TEST_CASE("decisions are invariant under renaming and edge flips") {
  for (const auto& c : {octahedron(), generate_An(3, AnMode::Adjusted)}) {
    auto base = decide_embeddability(c, asserted()).status;
    auto flipped = flip_edge(reverse_face(c, 1), 2);
    CHECK(decide_embeddability(flipped, asserted()).status == base);
  }
}
