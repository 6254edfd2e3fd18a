#include "sc2/complex.hpp"

#include "sc2/graph.hpp"

#include <algorithm>
#include <set>

namespace sc2 {

namespace {

template <class Map>
int lookup(const Map& m, const std::string& id, const char* what) {
  auto it = m.find(id);
  if (it == m.end()) throw InputError(std::string("unknown ") + what + " id '" + id + "'");
  return it->second;
}

}  // namespace

Complex2::Complex2(const ComplexSpec& spec) {
  for (const auto& v : spec.vertices) {
    if (!vertex_pos_.emplace(v, static_cast<int>(vertices_.size())).second)
      throw InputError("duplicate vertex id '" + v + "'");
    vertices_.push_back(v);
  }
  for (const auto& [id, tail, head] : spec.edges) {
    if (!edge_pos_.emplace(id, static_cast<int>(edges_.size())).second)
      throw InputError("duplicate edge id '" + id + "'");
    edges_.push_back(Edge{id, lookup(vertex_pos_, tail, "vertex"), lookup(vertex_pos_, head, "vertex")});
  }
  for (const auto& [id, walk] : spec.faces) {
    if (!face_pos_.emplace(id, static_cast<int>(faces_.size())).second)
      throw InputError("duplicate face id '" + id + "'");
    if (walk.empty()) throw InputError("empty face walk '" + id + "'");
    Face f{id, {}};
    for (const auto& [e, s] : walk) {
      if (s != 1 && s != -1) throw InputError("face '" + id + "' has a traversal sign other than +1/-1");
      f.walk.push_back(Traversal{lookup(edge_pos_, e, "edge"), s});
    }
    faces_.push_back(std::move(f));
  }

  std::vector<bool> used(edges_.size(), false);
  for (const auto& f : faces_) {
    for (std::size_t i = 0; i < f.walk.size(); ++i) {
      const auto& next = f.walk[(i + 1) % f.walk.size()];
      if (end_of(f.walk[i]) != start_of(next))
        throw InputError("non-closed walk in face '" + f.id + "' at position " + std::to_string(i));
      used[f.walk[i].edge] = true;
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (!used[e]) throw InputError("edge '" + edges_[e].id + "' lies in no face");

  simplicial_ = true;
  std::set<std::vector<int>> edge_sets;
  for (const auto& f : faces_) {
    if (f.walk.size() != 3) {
      simplicial_ = false;
      break;
    }
    std::vector<int> es, vs;
    for (const auto& t : f.walk) {
      es.push_back(t.edge);
      vs.push_back(start_of(t));
      if (edges_[t.edge].loop()) simplicial_ = false;
    }
    std::sort(es.begin(), es.end());
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end() || std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      simplicial_ = false;
    if (!edge_sets.insert(es).second) simplicial_ = false;
    if (!simplicial_) break;
  }
}

int Complex2::vertex_index(const std::string& id) const { return lookup(vertex_pos_, id, "vertex"); }
int Complex2::edge_index(const std::string& id) const { return lookup(edge_pos_, id, "edge"); }
int Complex2::face_index(const std::string& id) const { return lookup(face_pos_, id, "face"); }

std::vector<int> Complex2::faces_at_edge(int e) const {
  std::vector<int> out;
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (const auto& t : faces_[f].walk)
      if (t.edge == e) {
        out.push_back(static_cast<int>(f));
        break;
      }
  return out;
}

std::vector<int> Complex2::faces_at_vertex(int v) const {
  std::vector<int> out;
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (const auto& t : faces_[f].walk)
      if (start_of(t) == v) {
        out.push_back(static_cast<int>(f));
        break;
      }
  return out;
}

ComplexSpec Complex2::spec() const {
  ComplexSpec s;
  s.vertices = vertices_;
  for (const auto& e : edges_) s.edges.emplace_back(e.id, vertices_[e.tail], vertices_[e.head]);
  for (const auto& f : faces_) {
    std::vector<std::pair<std::string, int>> walk;
    for (const auto& t : f.walk) walk.emplace_back(edges_[t.edge].id, t.sign);
    s.faces.emplace_back(f.id, std::move(walk));
  }
  return s;
}

int LinkGraph::node_index(LinkNode n) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
  if (it == nodes.end() || *it != n) return -1;
  return static_cast<int>(it - nodes.begin());
}

LinkGraph link_graph(const Complex2& c, int v) {
  if (v < 0 || v >= static_cast<int>(c.num_vertices())) throw InputError("unknown vertex index");
  LinkGraph l;
  l.vertex = v;
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto& ed = c.edges()[e];
    if (ed.tail == v) l.nodes.push_back(LinkNode{static_cast<int>(e), false});
    if (ed.head == v) l.nodes.push_back(LinkNode{static_cast<int>(e), true});
  }
  std::sort(l.nodes.begin(), l.nodes.end());
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const auto& walk = c.faces()[f].walk;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& a = walk[i];
      const auto& b = walk[(i + 1) % walk.size()];
      if (c.end_of(a) != v) continue;
      LinkNode in{a.edge, a.sign > 0};
      LinkNode out{b.edge, b.sign < 0};
      l.links.push_back(Link{static_cast<int>(f), static_cast<int>(i), l.node_index(in), l.node_index(out)});
    }
  }
  return l;
}

LinkGraph link_graph(const Complex2& c, const std::string& v) { return link_graph(c, c.vertex_index(v)); }

IntRows incidence_matrix(const Complex2& c) {
  IntRows a(c.num_edges(), IntRow(c.num_faces(), 0));
  for (std::size_t f = 0; f < c.num_faces(); ++f)
    for (const auto& t : c.faces()[f].walk) a[t.edge][f] += t.sign;
  return a;
}

namespace {

Multigraph link_multigraph(const LinkGraph& l) {
  Multigraph g;
  g.n = static_cast<int>(l.nodes.size());
  for (const auto& k : l.links) g.add_edge(k.in, k.out);
  return g;
}

}  // namespace

ConnectivityProfile local_connectivity_profile(const Complex2& c) {
  ConnectivityProfile p;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto g = link_multigraph(link_graph(c, static_cast<int>(v)));
    VertexConnectivity vc;
    vc.vertex = c.vertices()[v];
    vc.connected = is_connected(g);
    vc.biconnected = vc.connected && is_k_connected(g, 2);
    vc.triconnected = vc.biconnected && is_k_connected(g, 3);
    p.locally_connected &= vc.connected;
    p.locally_2connected &= vc.biconnected;
    p.locally_3connected &= vc.triconnected;
    p.vertices.push_back(vc);
  }
  return p;
}

Complex2 identify_cells(const Complex2& c, const Identification& spec) {
  std::vector<int> vrep(c.num_vertices());
  for (std::size_t v = 0; v < vrep.size(); ++v) vrep[v] = static_cast<int>(v);
  for (const auto& group : spec.vertex_groups) {
    if (group.empty()) continue;
    int r = c.vertex_index(group[0]);
    for (const auto& id : group) {
      int v = c.vertex_index(id);
      if (vrep[v] != v && vrep[v] != r) throw InputError("vertex '" + id + "' appears in two groups");
      vrep[v] = r;
    }
  }
  // erep[e] = (representative edge, sign relating e to it)
  std::vector<std::pair<int, int>> erep(c.num_edges());
  for (std::size_t e = 0; e < erep.size(); ++e) erep[e] = {static_cast<int>(e), 1};
  for (const auto& group : spec.edge_groups) {
    if (group.empty()) continue;
    int r = c.edge_index(group[0]);
    const auto& re = c.edges()[r];
    for (const auto& id : group) {
      int e = c.edge_index(id);
      const auto& ed = c.edges()[e];
      int t = vrep[ed.tail], h = vrep[ed.head], rt = vrep[re.tail], rh = vrep[re.head];
      int sign;
      if (t == rt && h == rh)
        sign = 1;
      else if (t == rh && h == rt)
        sign = -1;
      else
        throw InputError("inconsistent edge identification of '" + id + "' with '" + group[0] + "'");
      if (erep[e].first != e && erep[e].first != r) throw InputError("edge '" + id + "' appears in two groups");
      erep[e] = {r, sign};
    }
  }

  ComplexSpec out;
  for (std::size_t v = 0; v < c.num_vertices(); ++v)
    if (vrep[v] == static_cast<int>(v)) out.vertices.push_back(c.vertices()[v]);
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    if (erep[e].first != static_cast<int>(e)) continue;
    const auto& ed = c.edges()[e];
    out.edges.emplace_back(ed.id, c.vertices()[vrep[ed.tail]], c.vertices()[vrep[ed.head]]);
  }
  for (const auto& f : c.faces()) {
    std::vector<std::pair<std::string, int>> walk;
    for (const auto& t : f.walk) {
      auto [r, s] = erep[t.edge];
      walk.emplace_back(c.edges()[r].id, t.sign * s);
    }
    out.faces.emplace_back(f.id, std::move(walk));
  }
  return Complex2(out);
}

Complex2 barycentric_simplicialization(const Complex2& c) {
  ComplexSpec out = c.spec();
  out.faces.clear();
  for (const auto& f : c.faces()) {
    std::string centre = f.id + "·c";
    out.vertices.push_back(centre);
    const std::size_t k = f.walk.size();
    auto spoke = [&](std::size_t i) { return f.id + "·s" + std::to_string(i % k); };
    for (std::size_t i = 0; i < k; ++i)
      out.edges.emplace_back(spoke(i), centre, c.vertices()[c.start_of(f.walk[i])]);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& t = f.walk[i];
      out.faces.emplace_back(f.id + "·" + std::to_string(i),
                             std::vector<std::pair<std::string, int>>{
                                 {spoke(i), 1}, {c.edges()[t.edge].id, t.sign}, {spoke(i + 1), -1}});
    }
  }
  return Complex2(out);
}

Complex2 flip_edge(const Complex2& c, int e) {
  ComplexSpec s = c.spec();
  auto& [id, tail, head] = s.edges[e];
  std::swap(tail, head);
  for (auto& [fid, walk] : s.faces)
    for (auto& [eid, sign] : walk)
      if (eid == id) sign = -sign;
  return Complex2(s);
}

Complex2 reverse_face(const Complex2& c, int f) {
  ComplexSpec s = c.spec();
  auto& walk = s.faces[f].second;
  std::reverse(walk.begin(), walk.end());
  for (auto& [eid, sign] : walk) sign = -sign;
  return Complex2(s);
}

}  // namespace sc2
