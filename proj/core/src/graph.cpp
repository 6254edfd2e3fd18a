#include "sc2/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sc2 {

int Multigraph::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const Multigraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    adj[u].emplace_back(v, static_cast<int>(i));
    if (u != v) adj[v].emplace_back(u, static_cast<int>(i));
  }
  return adj;
}

}  // namespace

std::vector<int> vertex_components(const Multigraph& g, const std::vector<bool>& removed) {
  auto adj = adjacency(g);
  std::vector<int> comp(g.n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0 || (!removed.empty() && removed[s])) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[u]) {
        if (comp[w] >= 0 || (!removed.empty() && removed[w])) continue;
        comp[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

int count_components(const Multigraph& g, const std::vector<bool>& removed) {
  auto comp = vertex_components(g, removed);
  int m = -1;
  for (int c : comp) m = std::max(m, c);
  return m + 1;
}

bool is_connected(const Multigraph& g) { return g.n > 0 && count_components(g) == 1; }

std::vector<int> cut_vertices(const Multigraph& g) {
  std::vector<int> out;
  int base = count_components(g);
  std::vector<bool> removed(g.n, false);
  for (int v = 0; v < g.n; ++v) {
    removed[v] = true;
    // An isolated vertex disappearing lowers the count; that is not a cut.
    int after = count_components(g, removed);
    bool isolated = std::none_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return (e.first == v) != (e.second == v);
    });
    if (after > base - (isolated ? 1 : 0)) out.push_back(v);
    removed[v] = false;
  }
  return out;
}

bool is_k_connected(const Multigraph& g, int k) {
  if (!is_connected(g)) return false;
  if (k <= 1) return true;
  std::vector<bool> removed(g.n, false);
  for (int a = 0; a < g.n; ++a) {
    removed[a] = true;
    if (g.n - 1 >= 2 && count_components(g, removed) > 1) return false;
    if (k >= 3) {
      for (int b = a + 1; b < g.n; ++b) {
        removed[b] = true;
        if (g.n - 2 >= 2 && count_components(g, removed) > 1) return false;
        removed[b] = false;
      }
    }
    removed[a] = false;
  }
  return true;
}

std::vector<std::vector<int>> blocks(const Multigraph& g) {
  auto adj = adjacency(g);
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> out;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (auto [w, e] : adj[u]) {
      if (e == parent_edge) continue;
      if (g.edges[e].first == g.edges[e].second) continue;  // loops handled below
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<int> block;
          while (true) {
            int x = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(x);
            if (x == e) break;
          }
          std::sort(block.begin(), block.end());
          out.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        edge_stack.push_back(e);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int s = 0; s < g.n; ++s)
    if (disc[s] < 0) dfs(s, -1);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (g.edges[e].first == g.edges[e].second) out.push_back({static_cast<int>(e)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> block_vertices(const Multigraph& g, const std::vector<std::vector<int>>& bl) {
  std::vector<std::vector<int>> out;
  for (const auto& b : bl) {
    std::vector<int> vs;
    for (int e : b) {
      vs.push_back(g.edges[e].first);
      vs.push_back(g.edges[e].second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    out.push_back(std::move(vs));
  }
  return out;
}

bool edge_set_connected(const Multigraph& g, const std::vector<int>& edges) {
  if (edges.empty()) return true;
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e : edges) parent[find(g.edges[e].first)] = find(g.edges[e].second);
  int root = find(g.edges[edges[0]].first);
  for (int e : edges)
    if (find(g.edges[e].first) != root) return false;
  return true;
}

Multigraph without_isolated_vertices(const Multigraph& g) {
  std::vector<int> map(g.n, -1);
  Multigraph out;
  for (auto [u, v] : g.edges) {
    if (map[u] < 0) map[u] = out.add_vertex();
    if (map[v] < 0) map[v] = out.add_vertex();
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    out.add_edge(map[g.edges[i].first], map[g.edges[i].second], g.labels[i]);
  return out;
}

namespace {

std::vector<std::vector<int>> multiplicity(const Multigraph& g) {
  std::vector<std::vector<int>> m(g.n, std::vector<int>(g.n, 0));
  for (auto [u, v] : g.edges) {
    m[u][v]++;
    if (u != v) m[v][u]++;
  }
  return m;
}

// Degree (loops counted twice) and loop count, then sorted neighbour degrees.
std::vector<std::vector<long>> vertex_signatures(const Multigraph& g) {
  auto m = multiplicity(g);
  std::vector<long> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    deg[u]++;
    deg[v]++;
  }
  std::vector<std::vector<long>> sig(g.n);
  for (int v = 0; v < g.n; ++v) {
    sig[v] = {deg[v], m[v][v]};
    std::vector<long> nb;
    for (int w = 0; w < g.n; ++w)
      if (w != v && m[v][w] > 0) nb.push_back(deg[w] * 1000 + m[v][w]);
    std::sort(nb.begin(), nb.end());
    sig[v].insert(sig[v].end(), nb.begin(), nb.end());
  }
  return sig;
}

}  // namespace

std::string invariant_hash(const Multigraph& g) {
  auto sig = vertex_signatures(g);
  std::sort(sig.begin(), sig.end());
  std::ostringstream os;
  os << g.n << ':' << g.edges.size() << ':';
  for (const auto& s : sig) {
    os << '[';
    for (long x : s) os << x << ',';
    os << ']';
  }
  return os.str();
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  if (invariant_hash(a) != invariant_hash(b)) return false;
  auto ma = multiplicity(a), mb = multiplicity(b);
  auto sa = vertex_signatures(a), sb = vertex_signatures(b);
  const int n = a.n;
  // Match the most constrained vertices first.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int k) {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w] || ma[v][v] != mb[w][w]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = order[j];
        if (ma[v][u] != mb[w][map[u]]) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(k + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  // BFS order keeps adjacency checks effective early.
  std::vector<bool> seen(n, false);
  std::vector<int> bfs;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    bfs.push_back(s);
    for (std::size_t i = bfs.size() - 1; i < bfs.size(); ++i)
      for (int w = 0; w < n; ++w)
        if (!seen[w] && ma[bfs[i]][w] > 0) {
          seen[w] = true;
          bfs.push_back(w);
        }
  }
  order = bfs;
  return extend(0);
}

std::string labelled_canonical_form(const Multigraph& g) {
  std::vector<std::vector<std::string>> stars(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    stars[g.edges[i].first].push_back(g.labels[i]);
    stars[g.edges[i].second].push_back(g.labels[i]);
  }
  std::vector<std::string> parts;
  for (auto& s : stars) {
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    std::string joined;
    for (const auto& l : s) joined += l + '\x1f';
    parts.push_back(joined);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + '\x1e';
  return out;
}

}  // namespace sc2
