#include "sc2/splitting.hpp"

#include "sc2/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace sc2 {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Multigraph link_multigraph(const LinkGraph& l) {
  Multigraph g;
  g.n = static_cast<int>(l.nodes.size());
  for (const auto& k : l.links) g.add_edge(k.in, k.out);
  return g;
}

std::string original_of(const std::map<std::string, std::string>& m, const std::string& id) {
  auto it = m.find(id);
  return it == m.end() ? id : it->second;
}

// Compose clone maps: `later` maps ids of the newer complex into `earlier`'s ids.
std::map<std::string, std::string> compose(const std::map<std::string, std::string>& earlier,
                                           const std::map<std::string, std::string>& later) {
  std::map<std::string, std::string> out;
  for (const auto& [id, mid] : later) out[id] = original_of(earlier, mid);
  return out;
}

SplitResult chain(const SplitResult& first, const SplitResult& second) {
  SplitResult r;
  r.complex = second.complex;
  r.vertex_clone_map = compose(first.vertex_clone_map, second.vertex_clone_map);
  r.edge_clone_map = compose(first.edge_clone_map, second.edge_clone_map);
  return r;
}

// Related classes at the end of e sitting at `endvertex`, as unions over
// face indices (each class sorted).
std::vector<std::vector<int>> classes_at_node(const Complex2& c, int e, bool head_end) {
  const auto& edge = c.edges()[e];
  const int v = head_end ? edge.head : edge.tail;
  auto l = link_graph(c, v);
  const int node = l.node_index(LinkNode{e, head_end});
  const int nf = static_cast<int>(c.num_faces());
  // Union-find over faces followed by link nodes.
  UnionFind uf(nf + l.nodes.size());
  for (const auto& k : l.links)
    if (k.in != node && k.out != node) uf.unite(nf + k.in, nf + k.out);
  for (const auto& k : l.links) {
    if (k.in == node && k.out != node) uf.unite(k.face, nf + k.out);
    if (k.out == node && k.in != node) uf.unite(k.face, nf + k.in);
  }
  auto faces = c.faces_at_edge(e);
  std::map<int, std::vector<int>> groups;
  for (int f : faces) groups[uf.find(f)].push_back(f);
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> join_classes(const Complex2& c, const std::vector<std::vector<std::vector<int>>>& parts,
                                           int e) {
  UnionFind uf(c.num_faces());
  for (const auto& classes : parts)
    for (const auto& cl : classes)
      for (int f : cl) uf.unite(f, cl[0]);
  std::map<int, std::vector<int>> groups;
  for (int f : c.faces_at_edge(e)) groups[uf.find(f)].push_back(f);
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SplitResult identity_split(const Complex2& c) {
  SplitResult r;
  r.complex = c;
  for (const auto& v : c.vertices()) r.vertex_clone_map[v] = v;
  for (const auto& e : c.edges()) r.edge_clone_map[e.id] = e.id;
  return r;
}

SplitResult vertical_split(const Complex2& c) {
  SplitResult r;
  ComplexSpec out;
  // New endpoint id per (edge, head?) end.
  std::vector<std::array<std::string, 2>> end_id(c.num_edges());
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    const auto& id = c.vertices()[v];
    auto l = link_graph(c, static_cast<int>(v));
    auto comp = vertex_components(link_multigraph(l));
    int k = 0;
    for (int x : comp) k = std::max(k, x + 1);
    std::vector<std::string> names;
    if (k <= 1) {
      names.push_back(id);
    } else {
      for (int i = 0; i < k; ++i) names.push_back(id + "·" + std::to_string(i));
    }
    for (const auto& n : names) {
      out.vertices.push_back(n);
      r.vertex_clone_map[n] = id;
    }
    for (std::size_t i = 0; i < l.nodes.size(); ++i)
      end_id[l.nodes[i].edge][l.nodes[i].head ? 1 : 0] = names[comp[i]];
  }
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto& ed = c.edges()[e];
    out.edges.emplace_back(ed.id, end_id[e][0], end_id[e][1]);
    r.edge_clone_map[ed.id] = ed.id;
  }
  out.faces = c.spec().faces;
  r.complex = Complex2(out);
  return r;
}

std::vector<std::vector<int>> related_classes(const Complex2& c, int e, int endvertex) {
  const auto& ed = c.edges()[e];
  if (ed.loop()) throw InputError("edge '" + ed.id + "' is a loop");
  if (endvertex != ed.tail && endvertex != ed.head) throw InputError("vertex is not an end of edge '" + ed.id + "'");
  return classes_at_node(c, e, endvertex == ed.head);
}

std::vector<std::vector<int>> components_at_edge(const Complex2& c, int e) {
  const auto& ed = c.edges()[e];
  if (ed.loop()) throw InputError("edge '" + ed.id + "' is a loop");
  return join_classes(c, {related_classes(c, e, ed.tail), related_classes(c, e, ed.head)}, e);
}

SplitResult split_edge(const Complex2& c, int e, const std::vector<std::vector<int>>& classes) {
  SplitResult r;
  const auto& ed = c.edges()[e];
  std::map<int, std::string> clone_of_face;
  ComplexSpec s = c.spec();
  for (const auto& v : c.vertices()) r.vertex_clone_map[v] = v;
  s.edges.clear();
  for (std::size_t i = 0; i < c.num_edges(); ++i) {
    const auto& x = c.edges()[i];
    if (static_cast<int>(i) != e) {
      s.edges.emplace_back(x.id, c.vertices()[x.tail], c.vertices()[x.head]);
      r.edge_clone_map[x.id] = x.id;
      continue;
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
      std::string clone = ed.id + "·" + std::to_string(k);
      s.edges.emplace_back(clone, c.vertices()[x.tail], c.vertices()[x.head]);
      r.edge_clone_map[clone] = ed.id;
      for (int f : classes[k]) clone_of_face[f] = clone;
    }
  }
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    for (auto& [eid, sign] : s.faces[f].second)
      if (eid == ed.id) eid = clone_of_face.at(static_cast<int>(f));
  r.complex = Complex2(s);
  return r;
}

SplitResult edge_split_complex(const Complex2& c, std::optional<std::uint32_t> shuffle_seed) {
  SplitResult acc = identity_split(c);
  std::optional<std::mt19937> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);
  while (true) {
    const auto& cur = acc.complex;
    std::vector<int> order(cur.num_edges());
    std::iota(order.begin(), order.end(), 0);
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    bool changed = false;
    for (int e : order) {
      if (cur.edges()[e].loop()) continue;
      auto classes = components_at_edge(cur, e);
      if (classes.size() <= 1) continue;
      acc = chain(acc, split_edge(cur, e, classes));
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return acc;
}

SplitResult split_complex(const Complex2& c) {
  auto edges = edge_split_complex(c);
  return chain(edges, vertical_split(edges.complex));
}

std::vector<LazyStep> lazy_candidates(const Complex2& c) {
  std::vector<LazyStep> out;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto l = link_graph(c, static_cast<int>(v));
    auto g = link_multigraph(l);
    auto bl = blocks(g);
    auto bv = block_vertices(g, bl);
    std::vector<int> cyclic_blocks(l.nodes.size(), 0);
    for (std::size_t b = 0; b < bl.size(); ++b) {
      if (bl[b].size() < 2) continue;  // bridges and loops
      for (int x : bv[b]) cyclic_blocks[x]++;
    }
    for (std::size_t i = 0; i < l.nodes.size(); ++i) {
      const auto& ed = c.edges()[l.nodes[i].edge];
      if (ed.loop() || cyclic_blocks[i] < 2) continue;
      out.push_back(LazyStep{ed.id, c.vertices()[v]});
    }
  }
  std::sort(out.begin(), out.end(), [](const LazyStep& a, const LazyStep& b) {
    return std::tie(a.edge, a.vertex) < std::tie(b.edge, b.vertex);
  });
  return out;
}

namespace {

SplitResult lazy_step(const SplitResult& acc, const LazyStep& step) {
  const auto& c = acc.complex;
  int e = c.edge_index(step.edge);
  int v = c.vertex_index(step.vertex);
  auto classes = related_classes(c, e, v);
  return chain(acc, split_edge(c, e, classes));
}

}  // namespace

SplitResult lazy_edge_split(const Complex2& c, const std::vector<LazyStep>& order, std::vector<LazyStep>* used) {
  SplitResult acc = identity_split(c);
  if (used) used->clear();
  for (const auto& step : order) {
    auto cands = lazy_candidates(acc.complex);
    if (std::find(cands.begin(), cands.end(), step) == cands.end())
      throw InputError("lazy split step (" + step.edge + ", " + step.vertex + ") does not apply");
    acc = lazy_step(acc, step);
    if (used) used->push_back(step);
  }
  while (true) {
    auto cands = lazy_candidates(acc.complex);
    if (cands.empty()) break;
    acc = lazy_step(acc, cands.front());
    if (used) used->push_back(cands.front());
  }
  return acc;
}

std::vector<SplitResult> all_lazy_edge_splits(const Complex2& c) {
  std::vector<SplitResult> results;
  std::set<std::string> visited, terminal;
  std::function<void(const SplitResult&)> rec = [&](const SplitResult& acc) {
    if (!visited.insert(complex_canonical_form(acc.complex)).second) return;
    auto cands = lazy_candidates(acc.complex);
    if (cands.empty()) {
      if (terminal.insert(complex_canonical_form(acc.complex)).second) results.push_back(acc);
      return;
    }
    for (const auto& step : cands) rec(lazy_step(acc, step));
  };
  rec(identity_split(c));
  return results;
}

std::string complex_canonical_form(const Complex2& c) {
  std::vector<std::string> edges, vertices;
  std::vector<std::vector<std::tuple<std::string, std::size_t, int>>> occ(c.num_edges());
  std::vector<std::vector<std::pair<std::string, std::size_t>>> corners(c.num_vertices());
  for (const auto& f : c.faces())
    for (std::size_t i = 0; i < f.walk.size(); ++i) {
      occ[f.walk[i].edge].emplace_back(f.id, i, f.walk[i].sign);
      corners[c.start_of(f.walk[i])].emplace_back(f.id, i);
    }
  for (auto& o : occ) {
    std::sort(o.begin(), o.end());
    int flip = o.empty() ? 1 : std::get<2>(o.front());
    std::ostringstream os;
    for (const auto& [f, i, s] : o) os << f << '@' << i << (s * flip > 0 ? '+' : '-') << ';';
    edges.push_back(os.str());
  }
  for (auto& k : corners) {
    std::sort(k.begin(), k.end());
    std::ostringstream os;
    for (const auto& [f, i] : k) os << f << '@' << i << ';';
    vertices.push_back(os.str());
  }
  std::sort(edges.begin(), edges.end());
  std::sort(vertices.begin(), vertices.end());
  std::ostringstream os;
  os << "E:";
  for (const auto& e : edges) os << e << '|';
  os << "V:";
  for (const auto& v : vertices) os << v << '|';
  return os.str();
}

bool complexes_isomorphic(const Complex2& a, const Complex2& b) {
  return complex_canonical_form(a) == complex_canonical_form(b);
}

}  // namespace sc2
