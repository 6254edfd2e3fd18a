#pragma once

// Deterministic generators for the test and benchmark corpus.

#include "sc2/complex.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sc2 {

/// Simplicial complex from vertex triples. Vertex i is named "v{i}", the edge
/// between i < j is "v{i}v{j}" directed i -> j, triangle t is "t{t}".
Complex2 simplicial_from_triangles(int num_vertices, const std::vector<std::array<int, 3>>& triangles);

Complex2 tetrahedron();
Complex2 octahedron();
/// Cone over K_n: apex "a", base vertices "v{i}", spokes "s{i}" from the apex.
Complex2 cone_over_complete_graph(int n);
/// a x b x c box of unit cubes; faces are the unit squares.
Complex2 grid_complex(int a, int b, int c);
/// Seven-vertex triangulated torus.
Complex2 torus();
/// Two wheels with four spokes each, sharing the edge "e" between their hubs.
Complex2 two_wheels_complex();
/// Four triangles glued along "e", plus four triangles around the rim.
Complex2 two_hub_complex();

enum class AnMode {
  Unidentified,  // the complex before identifying the copy cycle
  Literal,       // identify w_i with every x(i',i,i)
  Adjusted,      // identify w_i with x(i',i,i) for i' not in {i, i+1}
};

/// The obstruction walk-complex family. Faces "e{i}" walk the base cycle
/// with detours; face "l" walks a disjoint copy cycle.
Complex2 generate_An(int n, AnMode mode);

/// Identifies two vertex-disjoint edges, matching tails with tails.
Complex2 identify_edge_pair(const Complex2& c, const std::string& e1, const std::string& e2);

struct EdgePairScan {
  std::vector<std::pair<std::string, std::string>> pairs;    // identifiable
  std::vector<std::pair<std::string, std::string>> skipped;  // would create a loop edge
};

/// Parallel, vertex-disjoint edge pairs of a grid complex (same axis).
EdgePairScan grid_edge_pairs(const Complex2& grid);

/// Small random walk-complex: polygons of length 3 or 4 on a few vertices,
/// occasionally using parallel edges.
Complex2 random_complex(std::uint32_t seed, int max_faces = 12);

/// The named corpus used by the tests: (name, complex).
std::vector<std::pair<std::string, Complex2>> standard_corpus();

}  // namespace sc2
