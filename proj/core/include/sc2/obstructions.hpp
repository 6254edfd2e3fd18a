#pragma once

// Matroids with connectivity constraints and the obstruction family M_n.

#include "sc2/corpus.hpp"
#include "sc2/graph.hpp"
#include "sc2/matroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sc2 {

struct ConstrainedMatroid {
  Matroid matroid;
  std::vector<std::vector<std::string>> constraints;  // element id sets
};

/// The cycle C_n on "e1".."en" plus the loop "l", with the constraints
/// X[i,n] = C_n - e_i - e_{i+1} + l (indices mod n).
ConstrainedMatroid make_Mn_with_constraints(int n);

/// Every realization up to graph isomorphism, without isolated vertices.
std::vector<Multigraph> enumerate_graph_realizations(const Matroid& m, std::size_t bound = kDefaultCircuitBound);

struct SatisfiabilityReport {
  bool satisfiable = false;
  std::optional<Multigraph> witness;
  /// Indices of the violated constraints, one entry per labelled realization
  /// examined (only filled in `all` mode or when unsatisfiable).
  std::vector<std::vector<int>> violation_map;
  std::size_t realizations = 0;
};

/// Some labelled realization makes every constraint a connected edge set.
SatisfiabilityReport constraints_satisfiable(const ConstrainedMatroid& cm, bool all = false,
                                             std::size_t bound = kDefaultCircuitBound);

/// Contract arbitrary elements, delete only elements outside every constraint.
ConstrainedMatroid constraint_minor(const ConstrainedMatroid& cm, const std::vector<std::string>& del,
                                    const std::vector<std::string>& con);
/// Minor with every constraint restricted to the surviving elements; unlike
/// constraint_minor, constrained elements may be deleted.
ConstrainedMatroid restricted_minor(const ConstrainedMatroid& cm, const std::vector<std::string>& del,
                                    const std::vector<std::string>& con);

/// Constraint sets of a complex with at least two faces that do not form a
/// circuit of its dual matroid (those are connected in every realization).
std::vector<std::vector<std::string>> nontrivial_constraints(const Complex2& c);

struct FactCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AnFactsReport {
  int n = 0;
  std::vector<FactCheck> checks;
  bool all_pass = false;
};

/// Machine-checks the facts about (M_n, X[.,n]) and the generated complexes.
AnFactsReport verify_An_facts(int n);

}  // namespace sc2
