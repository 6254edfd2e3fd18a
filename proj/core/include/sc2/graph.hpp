#pragma once

// Small multigraphs (loops and parallel edges allowed) and the connectivity
// and isomorphism routines the rest of the library needs.

#include <string>
#include <utility>
#include <vector>

namespace sc2 {

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;  // one per edge; may be empty strings

  int add_vertex() { return n++; }
  int add_edge(int u, int v, std::string label = {}) {
    edges.emplace_back(u, v);
    labels.push_back(std::move(label));
    return static_cast<int>(edges.size()) - 1;
  }
  int label_index(const std::string& label) const;
};

/// Component id per vertex; vertices with removed[v] get -1.
std::vector<int> vertex_components(const Multigraph& g, const std::vector<bool>& removed = {});
int count_components(const Multigraph& g, const std::vector<bool>& removed = {});

/// Connected, with at least one vertex.
bool is_connected(const Multigraph& g);
std::vector<int> cut_vertices(const Multigraph& g);
/// k-connectivity for k <= 3 in the sense "connected and no set of fewer than
/// k vertices separates the rest". Small graphs (triangles, K2) qualify.
bool is_k_connected(const Multigraph& g, int k);

/// Edge sets of the blocks (2-connected components). A loop is a block on
/// its own; isolated vertices have no block.
std::vector<std::vector<int>> blocks(const Multigraph& g);
/// Vertex sets of the blocks, parallel to blocks().
std::vector<std::vector<int>> block_vertices(const Multigraph& g, const std::vector<std::vector<int>>& blocks);

/// The subgraph formed by the given edges (with their endpoints) is
/// connected. The empty set counts as connected.
bool edge_set_connected(const Multigraph& g, const std::vector<int>& edges);

/// Drops vertices not incident with any edge.
Multigraph without_isolated_vertices(const Multigraph& g);

/// Isomorphism of unlabelled multigraphs (vertex bijection preserving the
/// number of edges between every pair, loops included).
bool isomorphic(const Multigraph& a, const Multigraph& b);
/// Cheap isomorphism invariant used for bucketing.
std::string invariant_hash(const Multigraph& g);

/// Canonical form of an edge-labelled graph with anonymous vertices: the
/// sorted list of vertex stars, each star the sorted list of edge labels
/// (loops listed twice).
std::string labelled_canonical_form(const Multigraph& g);

}  // namespace sc2
