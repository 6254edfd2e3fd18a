#pragma once

// Vertical, edge, full and lazy split complexes. Faces are never renamed;
// split vertices and edges become clones named "<original>·k".

#include "sc2/complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sc2 {

struct SplitResult {
  Complex2 complex;
  std::map<std::string, std::string> vertex_clone_map;  // new id -> original id
  std::map<std::string, std::string> edge_clone_map;
};

SplitResult identity_split(const Complex2& c);

/// One vertex per connected component of each link graph.
SplitResult vertical_split(const Complex2& c);

/// Faces at e related through the link at one endvertex (face indices).
std::vector<std::vector<int>> related_classes(const Complex2& c, int e, int endvertex);
/// Connected components at e: the join of the relations at both ends.
std::vector<std::vector<int>> components_at_edge(const Complex2& c, int e);

/// Replace edge e by one clone per class of faces.
SplitResult split_edge(const Complex2& c, int e, const std::vector<std::vector<int>>& classes);

/// Split edges until every edge has a single component. With a seed the
/// edges are visited in a shuffled order; the result is the same up to
/// isomorphism either way.
SplitResult edge_split_complex(const Complex2& c, std::optional<std::uint32_t> shuffle_seed = std::nullopt);

/// Vertical split of the edge split complex.
SplitResult split_complex(const Complex2& c);

struct LazyStep {
  std::string edge;
  std::string vertex;
  friend bool operator==(const LazyStep&, const LazyStep&) = default;
};

/// (edge, endvertex) pairs where a lazy split still applies: the edge's node
/// is a cut vertex of the link graph lying in at least two blocks that
/// contain a cycle. Loop edges are skipped.
std::vector<LazyStep> lazy_candidates(const Complex2& c);

/// Applies the given steps, then continues with the first candidate until
/// none is left. `used` receives the steps actually applied.
SplitResult lazy_edge_split(const Complex2& c, const std::vector<LazyStep>& order,
                            std::vector<LazyStep>* used = nullptr);

/// Every lazy edge split complex reachable by some order, one per
/// face-preserving isomorphism class.
std::vector<SplitResult> all_lazy_edge_splits(const Complex2& c);

/// Canonical form up to renaming vertices and edges and flipping edge
/// directions, with face ids and walk positions fixed.
std::string complex_canonical_form(const Complex2& c);
bool complexes_isomorphic(const Complex2& a, const Complex2& b);

}  // namespace sc2
