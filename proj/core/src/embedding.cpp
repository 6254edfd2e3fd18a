#include "sc2/embedding.hpp"

#include "sc2/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace sc2 {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Corner lookup: (face, pos) -> link index in a link graph.
std::map<std::pair<int, int>, int> corner_index(const LinkGraph& l) {
  std::map<std::pair<int, int>, int> out;
  for (std::size_t k = 0; k < l.links.size(); ++k) out[{l.links[k].face, l.links[k].pos}] = static_cast<int>(k);
  return out;
}

// The dart at node (e, head_end) belonging to traversal t of e.
int dart_of(const Complex2& c, const std::map<std::pair<int, int>, int>& corners, TraversalRef t, bool head_end) {
  const auto& walk = c.faces()[t.face].walk;
  const int len = static_cast<int>(walk.size());
  const bool arrives = (walk[t.pos].sign > 0) == head_end;
  if (arrives) return 2 * corners.at({t.face, t.pos});
  return 2 * corners.at({t.face, (t.pos - 1 + len) % len}) + 1;
}

}  // namespace

std::vector<TraversalRef> traversals_of_edge(const Complex2& c, int e) {
  std::vector<TraversalRef> out;
  for (std::size_t f = 0; f < c.num_faces(); ++f)
    for (std::size_t i = 0; i < c.faces()[f].walk.size(); ++i)
      if (c.faces()[f].walk[i].edge == e) out.push_back({static_cast<int>(f), static_cast<int>(i)});
  return out;
}

void validate_rotation_system(const Complex2& c, const RotationSystem& s) {
  if (s.sigma.size() != c.num_edges()) throw InputError("rotation system does not cover every edge");
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    auto want = traversals_of_edge(c, static_cast<int>(e));
    auto have = s.sigma[e];
    std::sort(have.begin(), have.end());
    if (have != want) throw InputError("rotation at edge '" + c.edges()[e].id + "' does not list its traversals");
  }
}

bool is_3flow(const Multigraph& g, const IntRow& v) {
  std::vector<BigInt> net(g.n, 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    if (a == b) continue;
    net[b] += v[i];
    net[a] -= v[i];
  }
  for (const auto& x : net)
    if (x % 3 != 0) return false;
  return true;
}

Multigraph orient_for_3flows(const Multigraph& g, const IntRows& vectors) {
  const PrimeOps k{3};
  Multigraph out = g;
  auto bl = blocks(g);
  auto bv = block_vertices(g, bl);
  for (std::size_t b = 0; b < bl.size(); ++b) {
    if (bl[b].size() < 2) continue;  // bridges and loops carry no flow constraint
    const auto& edges = bl[b];
    std::map<int, std::map<int, int>> bond;  // vertex -> (edge -> +-1)
    for (int u : bv[b]) {
      std::vector<int> star;
      for (int f : edges)
        if (g.edges[f].first == u || g.edges[f].second == u) star.push_back(f);
      Rows<PrimeOps> m;
      for (const auto& row : vectors) {
        std::vector<PrimeOps::T> r;
        for (int f : star) r.push_back(k.from_int(row[f]));
        m.push_back(std::move(r));
      }
      auto ker = kernel_basis(k, m, star.size());
      std::optional<std::vector<PrimeOps::T>> full;
      // A bond's kernel is one-dimensional; the search also covers larger kernels.
      const std::size_t dim = ker.size();
      std::size_t combos = 1;
      for (std::size_t i = 0; i < dim && combos < 100000; ++i) combos *= 3;
      for (std::size_t code = 1; code < combos && !full; ++code) {
        std::vector<PrimeOps::T> v(star.size(), 0);
        std::size_t x = code;
        for (std::size_t i = 0; i < dim; ++i, x /= 3)
          for (std::size_t j = 0; j < star.size(); ++j) v[j] = k.add(v[j], k.mul(static_cast<int>(x % 3), ker[i][j]));
        if (std::none_of(v.begin(), v.end(), [](int a) { return a == 0; })) full = v;
      }
      if (!full) throw EmbeddingError("no atomic bond vector at dual vertex " + std::to_string(u));
      for (std::size_t j = 0; j < star.size(); ++j) bond[u][star[j]] = static_cast<int>(k.lift((*full)[j]));
    }
    // Propagate signs so that the two ends of every edge see opposite values.
    std::map<int, int> sign;
    std::queue<int> queue;
    sign[bv[b].front()] = 1;
    queue.push(bv[b].front());
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int f : edges) {
        auto [x, y] = g.edges[f];
        if (x != u && y != u) continue;
        int w = x == u ? y : x;
        if (sign.count(w)) continue;
        sign[w] = -sign[u] * bond[u][f] * bond[w][f];
        queue.push(w);
      }
    }
    for (int f : edges) {
      auto [x, y] = g.edges[f];
      int dx = sign[x] * bond[x][f], dy = sign[y] * bond[y][f];
      if (dx != -dy) throw EmbeddingError("inconsistent bond signs on a fundamental circuit");
      out.edges[f] = dx > 0 ? std::make_pair(y, x) : std::make_pair(x, y);
    }
  }
  for (const auto& v : vectors)
    if (!is_3flow(out, v)) throw EmbeddingError("constructed orientation is not a 3-flow orientation");
  return out;
}

IntRows incidence_rows_on_graph(const Complex2& c, const Multigraph& g) {
  std::vector<int> column(c.num_faces(), -1);
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    column[f] = g.label_index(c.faces()[f].id);
    if (column[f] < 0) throw EmbeddingError("graph has no edge for face '" + c.faces()[f].id + "'");
  }
  IntRows rows(c.num_edges(), IntRow(g.edges.size(), 0));
  for (std::size_t f = 0; f < c.num_faces(); ++f)
    for (const auto& t : c.faces()[f].walk) rows[t.edge][column[f]] += t.sign;
  return rows;
}

RotationSystem rotation_system_from_graph(const Complex2& c, const Multigraph& oriented) {
  RotationSystem s;
  s.sigma.resize(c.num_edges());
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto& eid = c.edges()[e].id;
    auto ts = traversals_of_edge(c, static_cast<int>(e));
    struct Arc {
      int from, to;
      TraversalRef t;
    };
    std::vector<Arc> arcs;
    std::map<int, int> balance;
    for (const auto& t : ts) {
      int ge = oriented.label_index(c.faces()[t.face].id);
      if (ge < 0) throw EmbeddingError("graph has no edge for face '" + c.faces()[t.face].id + "'");
      auto [a, b] = oriented.edges[ge];
      if (c.faces()[t.face].walk[t.pos].sign < 0) std::swap(a, b);
      arcs.push_back({a, b, t});
      balance[a]--;
      balance[b]++;
    }
    for (const auto& [v, x] : balance)
      if (x != 0) throw EmbeddingError("vector of edge '" + eid + "' is not a directed cycle");
    // Hierholzer's algorithm over the arcs.
    std::map<int, std::vector<int>> out_arcs;
    for (std::size_t i = arcs.size(); i-- > 0;) out_arcs[arcs[i].from].push_back(static_cast<int>(i));
    std::vector<int> stack{-1}, circuit;
    std::vector<int> at{arcs.front().from};
    while (!stack.empty()) {
      int v = at.back();
      auto& avail = out_arcs[v];
      if (!avail.empty()) {
        int a = avail.back();
        avail.pop_back();
        stack.push_back(a);
        at.push_back(arcs[a].to);
      } else {
        if (stack.back() >= 0) circuit.push_back(stack.back());
        stack.pop_back();
        at.pop_back();
      }
    }
    if (circuit.size() != arcs.size()) throw EmbeddingError("traversals of edge '" + eid + "' do not form a closed trail");
    std::reverse(circuit.begin(), circuit.end());
    for (int a : circuit) s.sigma[e].push_back(arcs[a].t);
  }
  return s;
}

LinkRotation link_rotation(const Complex2& c, const LinkGraph& l, const RotationSystem& s) {
  auto corners = corner_index(l);
  LinkRotation rot(l.nodes.size());
  for (std::size_t n = 0; n < l.nodes.size(); ++n) {
    const auto& node = l.nodes[n];
    const auto& order = s.sigma[node.edge];
    for (const auto& t : order) rot[n].push_back(dart_of(c, corners, t, node.head));
    if (node.head) std::reverse(rot[n].begin(), rot[n].end());
  }
  return rot;
}

LinkFaceReport trace_link_faces(const LinkGraph& l, const LinkRotation& rotation) {
  LinkFaceReport r;
  const int darts = static_cast<int>(2 * l.links.size());
  std::vector<int> next(darts, -1);
  for (std::size_t n = 0; n < rotation.size(); ++n) {
    const auto& ring = rotation[n];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      int d = ring[i];
      int node = d % 2 == 0 ? l.links[d / 2].in : l.links[d / 2].out;
      if (d < 0 || d >= darts || node != static_cast<int>(n) || next[d] >= 0)
        throw InputError("link rotation does not match the link-ends");
      next[d] = ring[(i + 1) % ring.size()];
    }
  }
  for (int d = 0; d < darts; ++d)
    if (next[d] < 0) throw InputError("link rotation misses a link-end");
  r.face_of_dart.assign(darts, -1);
  for (int d = 0; d < darts; ++d) {
    if (r.face_of_dart[d] >= 0) continue;
    for (int x = d; r.face_of_dart[x] < 0; x = next[x ^ 1]) r.face_of_dart[x] = r.faces;
    ++r.faces;
  }
  UnionFind uf(l.nodes.size());
  for (const auto& k : l.links) uf.unite(k.in, k.out);
  for (std::size_t n = 0; n < l.nodes.size(); ++n)
    if (uf.find(static_cast<int>(n)) == static_cast<int>(n)) ++r.components;
  r.vertices = static_cast<int>(l.nodes.size());
  r.edges = static_cast<int>(l.links.size());
  r.euler_genus = 2 * r.components - (r.vertices - r.edges + r.faces);
  r.is_sphere = r.euler_genus == 0;
  return r;
}

PlanarityReport is_planar_rotation_system(const Complex2& c, const RotationSystem& s) {
  validate_rotation_system(c, s);
  PlanarityReport out;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto l = link_graph(c, static_cast<int>(v));
    auto rep = trace_link_faces(l, link_rotation(c, l, s));
    out.planar = out.planar && rep.is_sphere;
    out.vertices.push_back({c.vertices()[v], std::move(rep)});
  }
  return out;
}

Multigraph dual_graph_of_rotation(const Complex2& c, const RotationSystem& s) {
  validate_rotation_system(c, s);
  const std::size_t nv = c.num_vertices();
  std::vector<LinkGraph> links(nv);
  std::vector<std::map<std::pair<int, int>, int>> corners(nv);
  std::vector<LinkFaceReport> traced(nv);
  std::vector<int> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    links[v] = link_graph(c, static_cast<int>(v));
    corners[v] = corner_index(links[v]);
    traced[v] = trace_link_faces(links[v], link_rotation(c, links[v], s));
    offset[v + 1] = offset[v] + traced[v].faces;
  }
  auto region = [&](int v, int dart) { return offset[v] + traced[v].face_of_dart[dart]; };
  UnionFind uf(offset[nv]);
  // gap[e][j] = region between sigma(e)[j] and sigma(e)[j+1], seen from the tail.
  std::vector<std::vector<int>> gap(c.num_edges());
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto& ed = c.edges()[e];
    const auto& order = s.sigma[e];
    const std::size_t m = order.size();
    for (std::size_t j = 0; j < m; ++j) {
      const auto& t = order[j];
      const auto& t2 = order[(j + 1) % m];
      int at_tail = region(ed.tail, dart_of(c, corners[ed.tail], t2, false));
      int at_head = region(ed.head, dart_of(c, corners[ed.head], t, true));
      uf.unite(at_tail, at_head);
      gap[e].push_back(at_tail);
    }
  }
  // Number local surfaces in order of first appearance along the faces.
  std::map<int, int> surface;
  auto surface_of = [&](int r) {
    auto [it, fresh] = surface.emplace(uf.find(r), static_cast<int>(surface.size()));
    return it->second;
  };
  Multigraph g;
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const auto& walk = c.faces()[f].walk;
    int side0 = -1, side1 = -1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int v = c.end_of(walk[i]);
      int k = corners[v].at({static_cast<int>(f), static_cast<int>(i)});
      int a = surface_of(region(v, 2 * k)), b = surface_of(region(v, 2 * k + 1));
      if (i == 0) {
        side0 = a;
        side1 = b;
      } else if (a != side0 || b != side1) {
        throw EmbeddingError("sides of face '" + c.faces()[f].id + "' disagree between corners");
      }
    }
    g.n = std::max(g.n, std::max(side0, side1) + 1);
    g.add_edge(side0, side1, c.faces()[f].id);
  }
  g.n = std::max(g.n, static_cast<int>(surface.size()));
  // Each sigma(e) must walk through the dual graph as a closed trail.
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto& order = s.sigma[e];
    const std::size_t m = order.size();
    for (std::size_t j = 0; j < m; ++j) {
      int before = surface_of(gap[e][(j + m - 1) % m]), after = surface_of(gap[e][j]);
      auto [x, y] = g.edges[order[j].face];
      if (!((x == before && y == after) || (x == after && y == before)))
        throw EmbeddingError("rotation at edge '" + c.edges()[e].id + "' is not a closed trail in the dual graph");
    }
  }
  return g;
}

std::vector<Constraint> constraint_sets(const Complex2& c) {
  std::vector<Constraint> out;
  auto make = [&](const std::string& cell, bool is_vertex, const std::vector<int>& faces) {
    Constraint k;
    k.cell = cell;
    k.is_vertex = is_vertex;
    for (int f : faces) k.faces.push_back(c.faces()[f].id);
    k.trivial = k.faces.size() <= 1;
    out.push_back(std::move(k));
  };
  for (std::size_t v = 0; v < c.num_vertices(); ++v)
    make(c.vertices()[v], true, c.faces_at_vertex(static_cast<int>(v)));
  for (std::size_t e = 0; e < c.num_edges(); ++e) make(c.edges()[e].id, false, c.faces_at_edge(static_cast<int>(e)));
  return out;
}

std::vector<Constraint> violated_constraints(const std::vector<Constraint>& constraints, const Multigraph& g) {
  std::map<std::string, int> edge_of;
  for (std::size_t i = 0; i < g.labels.size(); ++i) edge_of[g.labels[i]] = static_cast<int>(i);
  std::vector<Constraint> out;
  for (const auto& k : constraints) {
    std::vector<int> es;
    for (const auto& f : k.faces) {
      auto it = edge_of.find(f);
      if (it == edge_of.end()) throw InputError("graph has no edge for face '" + f + "'");
      es.push_back(it->second);
    }
    if (!edge_set_connected(g, es)) out.push_back(k);
  }
  return out;
}

OpenedEdge open_edge(const Complex2& c, const std::string& e, const std::vector<TraversalRef>& interval,
                     const RotationSystem& s) {
  validate_rotation_system(c, s);
  const int ei = c.edge_index(e);
  const auto& order = s.sigma[ei];
  const std::size_t m = order.size();
  if (interval.empty() || interval.size() >= m)
    throw InputError("opening interval at '" + e + "' must be a proper nonempty part of the rotation");
  auto start = std::find(order.begin(), order.end(), interval.front());
  if (start == order.end()) throw InputError("opening interval at '" + e + "' is not in its rotation");
  const std::size_t p = static_cast<std::size_t>(start - order.begin());
  for (std::size_t j = 0; j < interval.size(); ++j)
    if (order[(p + j) % m] != interval[j]) throw InputError("opening interval at '" + e + "' is not contiguous");
  std::vector<TraversalRef> rest;
  for (std::size_t j = interval.size(); j < m; ++j) rest.push_back(order[(p + j) % m]);
  const std::string ca = e + "·a", cb = e + "·b";
  std::set<TraversalRef> in_interval(interval.begin(), interval.end());

  ComplexSpec spec = c.spec();
  spec.edges.clear();
  for (const auto& ed : c.edges()) {
    if (ed.id != e) {
      spec.edges.emplace_back(ed.id, c.vertices()[ed.tail], c.vertices()[ed.head]);
      continue;
    }
    spec.edges.emplace_back(ca, c.vertices()[ed.tail], c.vertices()[ed.head]);
    spec.edges.emplace_back(cb, c.vertices()[ed.tail], c.vertices()[ed.head]);
  }
  for (std::size_t f = 0; f < spec.faces.size(); ++f)
    for (std::size_t i = 0; i < spec.faces[f].second.size(); ++i) {
      auto& step = spec.faces[f].second[i];
      if (step.first == e)
        step.first = in_interval.count({static_cast<int>(f), static_cast<int>(i)}) ? ca : cb;
    }
  OpenedEdge out{Complex2(spec), {}};
  out.rotation.sigma.resize(out.complex.num_edges());
  for (std::size_t x = 0; x < c.num_edges(); ++x) {
    if (static_cast<int>(x) == ei) continue;
    out.rotation.sigma[out.complex.edge_index(c.edges()[x].id)] = s.sigma[x];
  }
  out.rotation.sigma[out.complex.edge_index(ca)] = interval;
  out.rotation.sigma[out.complex.edge_index(cb)] = rest;
  return out;
}

}  // namespace sc2
