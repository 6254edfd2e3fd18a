#include "sc2/realize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace sc2 {

namespace {

class ForestSearch {
 public:
  ForestSearch(const Matroid& m, const std::function<bool(const Multigraph&)>& visit) : m_(m), visit_(visit) {
    const auto pattern = m.support_pattern();
    const auto& piv = m.pivots();
    std::vector<bool> is_pivot(m.size(), false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<int> tree_pos(m.size(), -1);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!is_pivot[j]) {
        tree_pos[j] = static_cast<int>(tree_.size());
        tree_.push_back(static_cast<int>(j));
      }
    paths_.resize(piv.size());
    paths_through_.resize(tree_.size());
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (pattern[i][j] && !is_pivot[j]) {
          paths_[i].push_back(tree_pos[j]);
          paths_through_[tree_pos[j]].push_back(static_cast<int>(i));
        }
    order_tree_edges();
  }

  bool run() {
    ends_.assign(tree_.size(), {-1, -1});
    placed_.assign(tree_.size(), false);
    vertices_ = 0;
    return place(0);
  }

 private:
  // Breadth-first over the "share a fundamental path" relation so that each
  // new edge is constrained by edges already placed.
  void order_tree_edges() {
    const std::size_t n = tree_.size();
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start]) continue;
      std::size_t best = start;
      for (std::size_t q = 0; q < n; ++q)
        if (!seen[q] && paths_through_[q].size() > paths_through_[best].size()) best = q;
      seen[best] = true;
      order_.push_back(static_cast<int>(best));
      for (std::size_t k = order_.size() - 1; k < order_.size(); ++k) {
        int q = order_[k];
        for (int p : paths_through_[q])
          for (int r : paths_[p])
            if (!seen[r]) {
              seen[r] = true;
              order_.push_back(r);
            }
      }
    }
  }

  std::vector<int> forest_components() const {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t q = 0; q < tree_.size(); ++q)
      if (placed_[q]) parent[find(ends_[q].first)] = find(ends_[q].second);
    std::vector<int> comp(vertices_);
    for (int v = 0; v < vertices_; ++v) comp[v] = find(v);
    return comp;
  }

  // Every fundamental path through q must still look like a path inside
  // each forest component.
  bool consistent(int q, const std::vector<int>& comp) const {
    for (int p : paths_through_[q]) {
      std::map<int, std::vector<int>> by_comp;
      bool complete = true;
      for (int r : paths_[p]) {
        if (!placed_[r]) {
          complete = false;
          continue;
        }
        by_comp[comp[ends_[r].first]].push_back(r);
      }
      if (complete && by_comp.size() > 1) return false;
      for (const auto& [c, edges] : by_comp) {
        std::map<int, int> degree;
        for (int r : edges) {
          degree[ends_[r].first]++;
          degree[ends_[r].second]++;
        }
        int ends = 0;
        for (const auto& [v, d] : degree) {
          if (d > 2) return false;
          if (d == 1) ++ends;
        }
        // A forest piece with max degree 2 and exactly two ends is a path.
        if (ends != 2) return false;
        if (degree.size() != edges.size() + 1) return false;
      }
    }
    return true;
  }

  bool try_place(std::size_t k, int q, int a, int b) {
    ends_[q] = {a, b};
    placed_[q] = true;
    auto comp = forest_components();
    bool keep_going = true;
    std::set<int> roots(comp.begin(), comp.end());
    const int remaining = static_cast<int>(tree_.size() - k - 1);
    if (static_cast<int>(roots.size()) - 1 <= remaining && consistent(q, comp)) keep_going = place(k + 1);
    placed_[q] = false;
    ends_[q] = {-1, -1};
    return keep_going;
  }

  bool place(std::size_t k) {
    if (k == order_.size()) return finish();
    const int q = order_[k];
    const int before = vertices_;
    auto comp = forest_components();
    // Existing vertex joined to a fresh one.
    for (int x = 0; x < before; ++x) {
      vertices_ = before + 1;
      if (!try_place(k, q, x, before)) return false;
    }
    // Two existing vertices in different forest components.
    for (int x = 0; x < before; ++x)
      for (int y = x + 1; y < before; ++y) {
        if (comp[x] == comp[y]) continue;
        vertices_ = before;
        if (!try_place(k, q, x, y)) return false;
      }
    // Two fresh vertices.
    vertices_ = before + 2;
    if (!try_place(k, q, before, before + 1)) return false;
    vertices_ = before;
    return true;
  }

  bool finish() {
    Multigraph g;
    g.n = vertices_;
    std::vector<std::pair<int, int>> edge_of(m_.size(), {-1, -1});
    for (std::size_t q = 0; q < tree_.size(); ++q) edge_of[tree_[q]] = ends_[q];
    const auto& piv = m_.pivots();
    for (std::size_t i = 0; i < piv.size(); ++i) {
      std::map<int, int> degree;
      for (int r : paths_[i]) {
        degree[ends_[r].first]++;
        degree[ends_[r].second]++;
      }
      std::vector<int> odd;
      for (const auto& [v, d] : degree)
        if (d == 1) odd.push_back(v);
      if (odd.size() != 2) return true;
      edge_of[piv[i]] = {odd[0], odd[1]};
    }
    for (std::size_t j = 0; j < m_.size(); ++j) g.add_edge(edge_of[j].first, edge_of[j].second, m_.ground()[j]);
    if (!matroid_equals(cycle_matroid(g, m_.field()), m_)) return true;
    return visit_(g);
  }

  const Matroid& m_;
  const std::function<bool(const Multigraph&)>& visit_;
  std::vector<int> tree_;                    // element index per tree slot
  std::vector<std::vector<int>> paths_;      // per pivot row: tree slots
  std::vector<std::vector<int>> paths_through_;
  std::vector<int> order_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<bool> placed_;
  int vertices_ = 0;
};

// Glue `block` onto `host`: for every existing component of host either no
// contact or one identified vertex pair (block vertex, host vertex).
bool glue_all(const Multigraph& host, const Multigraph& block, const std::function<bool(const Multigraph&)>& next) {
  auto comp = vertex_components(host);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < host.n; ++v) members[comp[v]].push_back(v);
  std::vector<std::vector<int>> attached(block.n);  // host vertices per block vertex
  std::function<bool(int)> rec = [&](int c) -> bool {
    if (c == ncomp) {
      Multigraph g = host;
      std::vector<int> map(block.n);
      for (int u = 0; u < block.n; ++u) map[u] = attached[u].empty() ? g.add_vertex() : attached[u][0];
      // Several host components meeting one block vertex merge into it.
      std::vector<int> redirect(g.n);
      std::iota(redirect.begin(), redirect.end(), 0);
      for (int u = 0; u < block.n; ++u)
        for (std::size_t i = 1; i < attached[u].size(); ++i) redirect[attached[u][i]] = map[u];
      for (auto& [a, b] : g.edges) {
        a = redirect[a];
        b = redirect[b];
      }
      for (std::size_t e = 0; e < block.edges.size(); ++e)
        g.add_edge(map[block.edges[e].first], map[block.edges[e].second], block.labels[e]);
      return next(without_isolated_vertices(g));
    }
    if (!rec(c + 1)) return false;
    for (int u = 0; u < block.n; ++u)
      for (int x : members[c]) {
        attached[u].push_back(x);
        bool go = rec(c + 1);
        attached[u].pop_back();
        if (!go) return false;
      }
    return true;
  };
  return rec(0);
}

}  // namespace

bool for_each_component_realization(const Matroid& component, const std::function<bool(const Multigraph&)>& visit) {
  if (component.size() == 1) {
    Multigraph g;
    if (component.is_loop(0)) {
      g.add_vertex();
      g.add_edge(0, 0, component.ground()[0]);
    } else {
      g.n = 2;
      g.add_edge(0, 1, component.ground()[0]);
    }
    return visit(g);
  }
  ForestSearch search(component, visit);
  return search.run();
}

bool for_each_labelled_realization(const Matroid& m, const std::function<bool(const Multigraph&)>& visit) {
  if (m.size() == 0) return visit(Multigraph{});
  std::vector<Matroid> parts;
  for (const auto& c : m.components()) parts.push_back(m.restrict_to(c));
  // Realize each component once up front; a non-graphic component ends it.
  std::vector<std::vector<Multigraph>> options(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for_each_component_realization(parts[i], [&](const Multigraph& g) {
      options[i].push_back(g);
      return true;
    });
    if (options[i].empty()) return true;
  }
  std::unordered_set<std::string> seen;
  std::function<bool(std::size_t, const Multigraph&)> rec = [&](std::size_t i, const Multigraph& host) -> bool {
    if (i == parts.size()) {
      if (!seen.insert(labelled_canonical_form(host)).second) return true;
      return visit(host);
    }
    for (const auto& block : options[i])
      if (!glue_all(host, block, [&](const Multigraph& g) { return rec(i + 1, g); })) return false;
    return true;
  };
  return rec(0, Multigraph{});
}

std::vector<GraphRealization> realize_graph(const Matroid& m, RealizeMode mode, std::size_t bound) {
  std::vector<GraphRealization> out;
  if (mode == RealizeMode::First) {
    Multigraph g;
    if (m.size() == 0) return {GraphRealization{g, 0}};
    g.add_vertex();
    for (const auto& c : m.components()) {
      Multigraph first;
      bool found = false;
      for_each_component_realization(m.restrict_to(c), [&](const Multigraph& r) {
        first = r;
        found = true;
        return false;
      });
      if (!found) return {};
      std::vector<int> map(first.n);
      map[0] = 0;
      for (int u = 1; u < first.n; ++u) map[u] = g.add_vertex();
      for (std::size_t e = 0; e < first.edges.size(); ++e)
        g.add_edge(map[first.edges[e].first], map[first.edges[e].second], first.labels[e]);
    }
    out.push_back(GraphRealization{g, count_components(g)});
    return out;
  }
  if (m.size() > bound)
    throw SizeGuardError("realization enumeration refused above " + std::to_string(bound) + " elements");
  // Unlabelled classes: deduplicate per component first, then glue.
  std::vector<Matroid> parts;
  for (const auto& c : m.components()) parts.push_back(m.restrict_to(c));
  std::vector<std::vector<Multigraph>> options(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for_each_component_realization(parts[i], [&](const Multigraph& g) {
      for (const auto& h : options[i])
        if (isomorphic(g, h)) return true;
      options[i].push_back(g);
      return true;
    });
    if (options[i].empty()) return {};
  }
  std::map<std::string, std::vector<Multigraph>> classes;
  std::function<void(std::size_t, const Multigraph&)> rec = [&](std::size_t i, const Multigraph& host) {
    if (i == parts.size()) {
      auto& bucket = classes[invariant_hash(host)];
      for (const auto& h : bucket)
        if (isomorphic(host, h)) return;
      bucket.push_back(host);
      out.push_back(GraphRealization{host, count_components(host)});
      return;
    }
    for (const auto& block : options[i])
      glue_all(host, block, [&](const Multigraph& g) {
        rec(i + 1, g);
        return true;
      });
  };
  rec(0, Multigraph{});
  // Fewest vertices first, so the glued-at-one-vertex class leads.
  std::stable_sort(out.begin(), out.end(),
                   [](const GraphRealization& a, const GraphRealization& b) { return a.graph.n < b.graph.n; });
  return out;
}

bool is_graphic(const Matroid& m) {
  for (const auto& c : m.components()) {
    bool found = false;
    for_each_component_realization(m.restrict_to(c), [&](const Multigraph&) {
      found = true;
      return false;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace sc2
