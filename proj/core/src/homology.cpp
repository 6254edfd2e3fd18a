#include "sc2/complex.hpp"

namespace sc2 {

namespace {

// Vertex/edge boundary matrix: rows = vertices, columns = edges.
IntRows vertex_edge_boundary(const Complex2& c) {
  IntRows d(c.num_vertices(), IntRow(c.num_edges(), 0));
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto& ed = c.edges()[e];
    if (ed.loop()) continue;
    d[ed.head][e] += 1;
    d[ed.tail][e] -= 1;
  }
  return d;
}

}  // namespace

HomologyReport homology_check(const Complex2& c) {
  HomologyReport r;
  const auto d1 = vertex_edge_boundary(c);
  const auto d2 = incidence_matrix(c);
  const int rank1 = rational_rank(d1, c.num_edges());
  const auto invariants = smith_invariants(d2);
  const int rank2 = static_cast<int>(invariants.size());
  r.h1_free_rank = static_cast<int>(c.num_edges()) - rank1 - rank2;
  for (const auto& d : invariants)
    if (d > 1) r.h1_torsion.push_back(d);
  r.nullhomologous = r.h1_free_rank == 0 && r.h1_torsion.empty();
  return r;
}

bool cycles_generated_mod_p(const Complex2& c, int p) {
  const int rank1 = rank_mod_p(vertex_edge_boundary(c), c.num_edges(), p);
  const int rank2 = rank_mod_p(incidence_matrix(c), c.num_faces(), p);
  return static_cast<int>(c.num_edges()) - rank1 == rank2;
}

}  // namespace sc2
