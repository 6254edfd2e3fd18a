#pragma once

// Graph realizations of represented matroids.
//
// A connected component of the matroid is realized by guessing a spanning
// tree on a basis B: every element outside B must close a cycle through the
// tree path given by its fundamental circuit. Trees are grown edge by edge
// as forests, pruned whenever some fundamental path stops being a path, and
// every complete candidate is checked by exact cycle-matroid equality
// (fundamental circuits alone do not pin down a ternary matroid).

#include "sc2/graph.hpp"
#include "sc2/matroid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sc2 {

enum class RealizeMode { First, All };

struct GraphRealization {
  Multigraph graph;  // edge labels are matroid element ids
  int components = 0;
};

/// All labelled realizations of a connected matroid (one entry per distinct
/// edge-labelled graph with anonymous vertices). The visitor returns false
/// to stop early; the function returns false if it was stopped.
bool for_each_component_realization(const Matroid& component, const std::function<bool(const Multigraph&)>& visit);

/// All labelled realizations of an arbitrary matroid, assembled from the
/// component realizations by every admissible gluing. No isolated vertices.
bool for_each_labelled_realization(const Matroid& m, const std::function<bool(const Multigraph&)>& visit);

/// `First`: one realization (all blocks glued at a single vertex).
/// `All`: every realization up to graph isomorphism.
/// Empty result iff m is not graphic.
std::vector<GraphRealization> realize_graph(const Matroid& m, RealizeMode mode,
                                            std::size_t bound = kDefaultCircuitBound);

/// The matroid is graphic.
bool is_graphic(const Matroid& m);

}  // namespace sc2
