#pragma once

// Combinatorial embeddings of 2-complexes: rotation systems around edges,
// the induced rotations of link graphs, face tracing, and the dual graph
// glued from link regions.

#include "sc2/complex.hpp"
#include "sc2/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sc2 {

/// Traversal `pos` of face `face`.
struct TraversalRef {
  int face;
  int pos;
  friend auto operator<=>(const TraversalRef&, const TraversalRef&) = default;
};

/// sigma[e] is a cyclic order of the traversals of edge e.
struct RotationSystem {
  std::vector<std::vector<TraversalRef>> sigma;
};

/// Raised when a construction step's precondition turns out to be false.
struct EmbeddingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<TraversalRef> traversals_of_edge(const Complex2& c, int e);
/// Throws InputError unless every sigma(e) lists the traversals of e exactly once.
void validate_rotation_system(const Complex2& c, const RotationSystem& s);

/// Kirchhoff's first law modulo 3 at every vertex; `v` is indexed by edges of g
/// and edge i is directed edges[i].first -> edges[i].second.
bool is_3flow(const Multigraph& g, const IntRow& v);

/// Re-orients the edges of g so that every row of `vectors` (indexed by the
/// edges of g) is a 3-flow. The cycle matroid of g must be the matroid whose
/// circuits are the minimal supports of the row space over F_3.
Multigraph orient_for_3flows(const Multigraph& g, const IntRows& vectors);

/// Rows of the edge/face incidence matrix of c, re-indexed by the edges of a
/// graph whose edge labels are face ids.
IntRows incidence_rows_on_graph(const Complex2& c, const Multigraph& g);

/// sigma(e) read off as the closed trail the traversals of e form in the
/// oriented dual graph (edge labels = face ids).
RotationSystem rotation_system_from_graph(const Complex2& c, const Multigraph& oriented);

/// Darts of a link graph are 2*link + side; side 0 sits at the link's `in`
/// node, side 1 at its `out` node. rotation[node] is the cyclic dart order.
using LinkRotation = std::vector<std::vector<int>>;

LinkRotation link_rotation(const Complex2& c, const LinkGraph& l, const RotationSystem& s);

struct LinkFaceReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int components = 0;
  int euler_genus = 0;
  bool is_sphere = false;
  std::vector<int> face_of_dart;  // orbit id per dart under rotation after reversal
};

LinkFaceReport trace_link_faces(const LinkGraph& l, const LinkRotation& rotation);

struct VertexGenus {
  std::string vertex;
  LinkFaceReport report;
};

struct PlanarityReport {
  bool planar = true;
  std::vector<VertexGenus> vertices;
};

PlanarityReport is_planar_rotation_system(const Complex2& c, const RotationSystem& s);

/// Vertices are local surfaces; edge i joins the two sides of face i and is
/// labelled with the face id. Throws EmbeddingError if the sides of a face
/// disagree between its corners or some sigma(e) is not a closed trail.
Multigraph dual_graph_of_rotation(const Complex2& c, const RotationSystem& s);

struct Constraint {
  std::string cell;
  bool is_vertex = false;
  std::vector<std::string> faces;
  bool trivial = false;  // at most one face
};

std::vector<Constraint> constraint_sets(const Complex2& c);
/// Constraints whose face set is not a connected edge set of g (labels = face ids).
std::vector<Constraint> violated_constraints(const std::vector<Constraint>& constraints, const Multigraph& g);

struct OpenedEdge {
  Complex2 complex;
  RotationSystem rotation;
};

/// Replaces e by "e·a" carrying the traversals in `interval` and "e·b"
/// carrying the rest. The interval must be a proper, nonempty contiguous
/// piece of sigma(e).
OpenedEdge open_edge(const Complex2& c, const std::string& e, const std::vector<TraversalRef>& interval,
                     const RotationSystem& s);

}  // namespace sc2
