#pragma once

// Directed 2-dimensional walk-complexes: vertices, directed edges and faces
// given as signed closed walks. Simplicial complexes are the special case
// flagged by `simplicial()`.

#include "sc2/intlinalg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sc2 {

/// Raised for malformed or inconsistent input; the message names the offending id.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Traversal {
  int edge;  // edge index
  int sign;  // +1 tail->head, -1 head->tail
  friend bool operator==(const Traversal&, const Traversal&) = default;
};

struct Edge {
  std::string id;
  int tail;
  int head;
  bool loop() const { return tail == head; }
};

struct Face {
  std::string id;
  std::vector<Traversal> walk;
};

/// Id-level description used to build a Complex2.
struct ComplexSpec {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;  // id, tail, head
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, int>>>> faces;
};

class Complex2 {
 public:
  Complex2() = default;
  /// Validates every invariant; throws InputError otherwise.
  explicit Complex2(const ComplexSpec& spec);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_faces() const { return faces_.size(); }

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  int face_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const { return vertex_pos_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return edge_pos_.count(id) > 0; }

  bool simplicial() const { return simplicial_; }

  /// Vertex a traversal starts from / arrives at.
  int start_of(const Traversal& t) const { return t.sign > 0 ? edges_[t.edge].tail : edges_[t.edge].head; }
  int end_of(const Traversal& t) const { return t.sign > 0 ? edges_[t.edge].head : edges_[t.edge].tail; }

  /// Face indices incident with an edge (sorted, unique).
  std::vector<int> faces_at_edge(int e) const;
  /// Face indices passing through a vertex (sorted, unique).
  std::vector<int> faces_at_vertex(int v) const;

  ComplexSpec spec() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::map<std::string, int> vertex_pos_, edge_pos_, face_pos_;
  bool simplicial_ = false;
};

/// One end of an edge at a vertex. Loop edges contribute both ends.
struct LinkNode {
  int edge;
  bool head;  // true: the head end of the edge sits at the vertex
  friend auto operator<=>(const LinkNode&, const LinkNode&) = default;
};

/// A face corner: traversal `pos` of `face` arrives at the vertex through
/// node `in`, and traversal pos+1 leaves through node `out`.
struct Link {
  int face;
  int pos;
  int in;
  int out;
};

struct LinkGraph {
  int vertex = -1;
  std::vector<LinkNode> nodes;
  std::vector<Link> links;

  int node_index(LinkNode n) const;
};

LinkGraph link_graph(const Complex2& c, int v);
LinkGraph link_graph(const Complex2& c, const std::string& v);

/// Net traversal counts: rows = edges, columns = faces.
IntRows incidence_matrix(const Complex2& c);

struct HomologyReport {
  int h1_free_rank = 0;
  std::vector<BigInt> h1_torsion;
  bool nullhomologous = false;
};

HomologyReport homology_check(const Complex2& c);
/// Face boundaries span the cycle space over F_p.
bool cycles_generated_mod_p(const Complex2& c, int p);

struct VertexConnectivity {
  std::string vertex;
  bool connected = false;
  bool biconnected = false;
  bool triconnected = false;
};

struct ConnectivityProfile {
  std::vector<VertexConnectivity> vertices;
  bool locally_connected = true;
  bool locally_2connected = true;
  bool locally_3connected = true;
};

ConnectivityProfile local_connectivity_profile(const Complex2& c);

struct Identification {
  std::vector<std::vector<std::string>> vertex_groups;
  std::vector<std::vector<std::string>> edge_groups;
};

/// Quotient complex. The first id of each group is kept.
Complex2 identify_cells(const Complex2& c, const Identification& spec);

/// Cones every face walk from a fresh centre vertex, one spoke per walk
/// position. Face `f` becomes faces "f·0", "f·1", ...
Complex2 barycentric_simplicialization(const Complex2& c);

/// Reverses the direction of one edge and rewrites all walks accordingly.
Complex2 flip_edge(const Complex2& c, int e);
/// Reverses one face walk.
Complex2 reverse_face(const Complex2& c, int f);

}  // namespace sc2
