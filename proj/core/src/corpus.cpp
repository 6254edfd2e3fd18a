#include "sc2/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace sc2 {

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

// Incremental builder that reuses an edge for a vertex pair unless told otherwise.
struct Builder {
  ComplexSpec spec;
  std::map<std::pair<std::string, std::string>, std::string> by_pair;

  void vertex(const std::string& v) { spec.vertices.push_back(v); }
  void edge(const std::string& id, const std::string& t, const std::string& h) {
    spec.edges.emplace_back(id, t, h);
    by_pair.emplace(std::make_pair(t, h), id);
  }
  // Traversal from a to b along the registered edge between them.
  std::pair<std::string, int> step(const std::string& a, const std::string& b) const {
    if (auto it = by_pair.find({a, b}); it != by_pair.end()) return {it->second, 1};
    if (auto it = by_pair.find({b, a}); it != by_pair.end()) return {it->second, -1};
    throw std::logic_error("no edge between " + a + " and " + b);
  }
  void polygon(const std::string& id, const std::vector<std::string>& cycle) {
    std::vector<std::pair<std::string, int>> walk;
    for (std::size_t i = 0; i < cycle.size(); ++i) walk.push_back(step(cycle[i], cycle[(i + 1) % cycle.size()]));
    spec.faces.emplace_back(id, std::move(walk));
  }
};

std::string grid_vertex(int x, int y, int z) {
  return "v" + std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(z);
}

std::string coords(int x, int y, int z) {
  return std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(z);
}

}  // namespace

Complex2 simplicial_from_triangles(int num_vertices, const std::vector<std::array<int, 3>>& triangles) {
  Builder b;
  for (int i = 0; i < num_vertices; ++i) b.vertex(vname(i));
  std::set<std::pair<int, int>> pairs;
  for (const auto& t : triangles)
    for (int i = 0; i < 3; ++i) {
      int u = t[i], v = t[(i + 1) % 3];
      pairs.emplace(std::min(u, v), std::max(u, v));
    }
  for (auto [u, v] : pairs) b.edge(vname(u) + vname(v), vname(u), vname(v));
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& t = triangles[i];
    b.polygon("t" + std::to_string(i), {vname(t[0]), vname(t[1]), vname(t[2])});
  }
  return Complex2(b.spec);
}

Complex2 tetrahedron() { return simplicial_from_triangles(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

Complex2 octahedron() {
  // v0, v1 are the poles; v2..v5 the equator.
  std::vector<std::array<int, 3>> t;
  for (int pole : {0, 1})
    for (int i = 0; i < 4; ++i) t.push_back({pole, 2 + i, 2 + (i + 1) % 4});
  return simplicial_from_triangles(6, t);
}

Complex2 cone_over_complete_graph(int n) {
  if (n < 2) throw InputError("cone over K_n needs n >= 2");
  Builder b;
  b.vertex("a");
  for (int i = 0; i < n; ++i) b.vertex(vname(i));
  for (int i = 0; i < n; ++i) b.edge("s" + std::to_string(i), "a", vname(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.edge(vname(i) + vname(j), vname(i), vname(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.polygon("f" + std::to_string(i) + std::to_string(j), {"a", vname(i), vname(j)});
  return Complex2(b.spec);
}

Complex2 grid_complex(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw InputError("grid dimensions must be non-negative");
  ComplexSpec s;
  for (int x = 0; x <= a; ++x)
    for (int y = 0; y <= b; ++y)
      for (int z = 0; z <= c; ++z) s.vertices.push_back(grid_vertex(x, y, z));
  for (int x = 0; x <= a; ++x)
    for (int y = 0; y <= b; ++y)
      for (int z = 0; z <= c; ++z) {
        if (x < a) s.edges.emplace_back("x:" + coords(x, y, z), grid_vertex(x, y, z), grid_vertex(x + 1, y, z));
        if (y < b) s.edges.emplace_back("y:" + coords(x, y, z), grid_vertex(x, y, z), grid_vertex(x, y + 1, z));
        if (z < c) s.edges.emplace_back("z:" + coords(x, y, z), grid_vertex(x, y, z), grid_vertex(x, y, z + 1));
      }
  // Unit square spanned by axes p < q at base point (x,y,z).
  auto square = [&](char p, char q, int x, int y, int z) {
    auto shift = [&](char axis) {
      return std::array<int, 3>{x + (axis == 'x'), y + (axis == 'y'), z + (axis == 'z')};
    };
    auto ap = shift(p), aq = shift(q);
    std::vector<std::pair<std::string, int>> walk{
        {std::string(1, p) + ":" + coords(x, y, z), 1},
        {std::string(1, q) + ":" + coords(ap[0], ap[1], ap[2]), 1},
        {std::string(1, p) + ":" + coords(aq[0], aq[1], aq[2]), -1},
        {std::string(1, q) + ":" + coords(x, y, z), -1},
    };
    s.faces.emplace_back(std::string{p, q} + ":" + coords(x, y, z), std::move(walk));
  };
  for (int x = 0; x <= a; ++x)
    for (int y = 0; y <= b; ++y)
      for (int z = 0; z <= c; ++z) {
        if (x < a && y < b) square('x', 'y', x, y, z);
        if (x < a && z < c) square('x', 'z', x, y, z);
        if (y < b && z < c) square('y', 'z', x, y, z);
      }
  return Complex2(s);
}

Complex2 torus() {
  std::vector<std::array<int, 3>> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return simplicial_from_triangles(7, t);
}

Complex2 two_wheels_complex() {
  Builder b;
  for (const char* v : {"v", "w", "a1", "a2", "a3", "b1", "b2", "b3"}) b.vertex(v);
  b.edge("e", "v", "w");
  const std::vector<std::string> rim_a{"w", "a1", "a2", "a3"}, rim_b{"v", "b1", "b2", "b3"};
  for (int i = 1; i < 4; ++i) b.edge("s" + rim_a[i], "v", rim_a[i]);
  for (int i = 1; i < 4; ++i) b.edge("s" + rim_b[i], "w", rim_b[i]);
  for (int i = 0; i < 3; ++i) b.edge(rim_a[i] + rim_a[i + 1], rim_a[i], rim_a[i + 1]);
  b.edge("a3w", "a3", "w");
  for (int i = 0; i < 3; ++i) b.edge(rim_b[i] + rim_b[i + 1], rim_b[i], rim_b[i + 1]);
  b.edge("b3v", "b3", "v");
  for (int i = 0; i < 4; ++i) b.polygon("p" + std::to_string(i + 1), {"v", rim_a[i], rim_a[(i + 1) % 4]});
  for (int i = 0; i < 4; ++i) b.polygon("q" + std::to_string(i + 1), {"w", rim_b[i], rim_b[(i + 1) % 4]});
  return Complex2(b.spec);
}

Complex2 two_hub_complex() {
  ComplexSpec s;
  s.vertices = {"v", "w", "v1", "v2", "v3", "v4"};
  s.edges.emplace_back("e", "v", "w");
  auto vi = [](int i) { return "v" + std::to_string(i); };
  auto ev = [](int i) { return "e" + std::to_string(i) + "[v]"; };
  auto ew = [](int i) { return "e" + std::to_string(i) + "[w]"; };
  auto ek = [](int i) { return "e" + std::to_string(i); };
  for (int i = 1; i <= 4; ++i) {
    s.edges.emplace_back(ev(i), "v", vi(i));
    s.edges.emplace_back(ew(i), "w", vi(i));
  }
  for (int k = 1; k <= 4; ++k) s.edges.emplace_back(ek(k), vi(k), vi(k % 4 + 1));
  for (int i = 1; i <= 4; ++i)
    s.faces.push_back({"f" + std::to_string(i), {{"e", 1}, {ew(i), 1}, {ev(i), -1}}});
  // Rim triangles: e_k[u] e_k e_{k+1}[u] for (u,k) = (v,1), (v,3), (w,2), (w,4).
  auto rim = [&](const std::string& name, auto side, int k) {
    s.faces.push_back({name, {{side(k), 1}, {ek(k), 1}, {side(k % 4 + 1), -1}}});
  };
  rim("g1", ev, 1);
  rim("g2", ev, 3);
  rim("g3", ew, 2);
  rim("g4", ew, 4);
  return Complex2(s);
}

Complex2 generate_An(int n, AnMode mode) {
  if (n < 3) throw InputError("A_n needs n >= 3");
  auto idx = [](int i) { return std::to_string(i); };
  auto dname = [&](int i, int k, int j) { return "d" + idx(i) + "." + idx(k) + "." + idx(j); };
  auto xname = [&](int i, int k, int j) { return "x" + idx(i) + "." + idx(k) + "." + idx(j); };
  ComplexSpec s;
  for (int k = 1; k <= n; ++k) s.vertices.push_back("v" + idx(k));
  for (int k = 1; k <= n; ++k) s.vertices.push_back("w" + idx(k));
  for (int k = 1; k <= n; ++k) s.edges.emplace_back("c" + idx(k), "v" + idx(k), "v" + idx(k % n + 1));
  for (int k = 1; k <= n; ++k) s.edges.emplace_back("c'" + idx(k), "w" + idx(k), "w" + idx(k % n + 1));
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<std::string, int>> walk;
    for (int k = 1; k <= n; ++k) {
      if (k != i)
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          s.vertices.push_back(xname(i, k, j));
          s.edges.emplace_back(dname(i, k, j), "v" + idx(k), xname(i, k, j));
          walk.emplace_back(dname(i, k, j), 1);
          walk.emplace_back(dname(i, k, j), -1);
        }
      walk.emplace_back("c" + idx(k), 1);
    }
    s.faces.emplace_back("e" + idx(i), std::move(walk));
  }
  {
    std::vector<std::pair<std::string, int>> walk;
    for (int k = 1; k <= n; ++k) walk.emplace_back("c'" + idx(k), 1);
    s.faces.emplace_back("l", std::move(walk));
  }
  Complex2 before(s);
  if (mode == AnMode::Unidentified) return before;
  Identification ident;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::string> group{"w" + idx(k)};
    for (int i = 1; i <= n; ++i) {
      if (i == k) continue;
      if (mode == AnMode::Adjusted && i == k % n + 1) continue;
      group.push_back(xname(i, k, k));
    }
    ident.vertex_groups.push_back(std::move(group));
  }
  return identify_cells(before, ident);
}

Complex2 identify_edge_pair(const Complex2& c, const std::string& e1, const std::string& e2) {
  const auto& a = c.edges()[c.edge_index(e1)];
  const auto& b = c.edges()[c.edge_index(e2)];
  if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head)
    throw InputError("edges '" + e1 + "' and '" + e2 + "' share a vertex");
  Identification ident;
  ident.vertex_groups = {{c.vertices()[a.tail], c.vertices()[b.tail]}, {c.vertices()[a.head], c.vertices()[b.head]}};
  ident.edge_groups = {{e1, e2}};
  return identify_cells(c, ident);
}

EdgePairScan grid_edge_pairs(const Complex2& grid) {
  EdgePairScan scan;
  std::set<std::pair<int, int>> adjacent;
  for (const auto& e : grid.edges()) adjacent.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head));
  auto joined = [&](int u, int v) { return adjacent.count({std::min(u, v), std::max(u, v)}) > 0; };
  const auto& es = grid.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].id[0] != es[j].id[0]) continue;
      if (es[i].tail == es[j].tail || es[i].tail == es[j].head || es[i].head == es[j].tail ||
          es[i].head == es[j].head)
        continue;
      auto pair = std::make_pair(es[i].id, es[j].id);
      if (joined(es[i].tail, es[j].tail) || joined(es[i].head, es[j].head))
        scan.skipped.push_back(pair);
      else
        scan.pairs.push_back(pair);
    }
  return scan;
}

Complex2 random_complex(std::uint32_t seed, int max_faces) {
  std::mt19937 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int nv = uniform(3, 6);
  const int nf = uniform(1, std::max(1, max_faces));
  ComplexSpec s;
  for (int i = 0; i < nv; ++i) s.vertices.push_back(vname(i));
  std::map<std::pair<int, int>, std::vector<std::string>> between;  // unordered pair -> edge ids
  std::map<std::string, std::pair<int, int>> ends;
  std::set<std::string> used;
  auto traverse = [&](int u, int v) -> std::pair<std::string, int> {
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto& list = between[key];
    if (list.empty() || uniform(0, 4) == 0) {
      std::string id = "e" + std::to_string(ends.size());
      if (uniform(0, 1))
        ends[id] = {u, v};
      else
        ends[id] = {v, u};
      list.push_back(id);
    }
    const auto& id = list[uniform(0, static_cast<int>(list.size()) - 1)];
    used.insert(id);
    return {id, ends[id].first == u ? 1 : -1};
  };
  for (int f = 0; f < nf; ++f) {
    const int len = std::min(nv, uniform(3, 4));
    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::string, int>> walk;
    for (int i = 0; i < len; ++i) walk.push_back(traverse(perm[i], perm[(i + 1) % len]));
    s.faces.emplace_back("f" + std::to_string(f), std::move(walk));
  }
  for (const auto& [id, uv] : ends)
    if (used.count(id)) s.edges.emplace_back(id, vname(uv.first), vname(uv.second));
  return Complex2(s);
}

std::vector<std::pair<std::string, Complex2>> standard_corpus() {
  return {
      {"tetrahedron", tetrahedron()},
      {"octahedron", octahedron()},
      {"cone-k4", cone_over_complete_graph(4)},
      {"cone-k5", cone_over_complete_graph(5)},
      {"grid-1x1x1", grid_complex(1, 1, 1)},
      {"grid-2x1x1", grid_complex(2, 1, 1)},
      {"grid-2x2x1", grid_complex(2, 2, 1)},
      {"grid-2x2x2", grid_complex(2, 2, 2)},
      {"torus", torus()},
      {"two-wheels", two_wheels_complex()},
      {"two-hub", two_hub_complex()},
      {"a3", generate_An(3, AnMode::Adjusted)},
      {"a4", generate_An(4, AnMode::Adjusted)},
      {"a4-literal", generate_An(4, AnMode::Literal)},
  };
}

}  // namespace sc2
