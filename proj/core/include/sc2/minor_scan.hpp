#pragma once

// Exhaustive search for the excluded minors of graphic matroids.

#include "sc2/matroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sc2 {

struct MinorWitness {
  std::string name;  // "U24", "F7", "F7*", "M(K5)*", "M(K33)*"
  std::vector<std::string> deleted;
  std::vector<std::string> contracted;
};

struct MinorScanVerdict {
  bool graphic_consistent = true;
  std::optional<MinorWitness> witness;
};

/// The five excluded minors, as represented matroids.
struct NamedMatroid {
  std::string name;
  Matroid matroid;
};
const std::vector<NamedMatroid>& excluded_minors_for_graphic();

/// Isomorphism of matroids via a bijection search on circuit sets.
bool matroid_isomorphic(const Matroid& a, const Matroid& b, std::size_t bound = kDefaultCircuitBound);

MinorScanVerdict excluded_minor_scan(const Matroid& m, std::size_t bound = kDefaultScanBound);

/// Witness for a non-graphic matroid of any size: greedily delete or contract
/// single elements while the result stays non-graphic. What remains is a
/// minimal non-graphic matroid, hence one of the excluded minors. Returns
/// nothing for graphic input.
std::optional<MinorWitness> excluded_minor_by_shrinking(const Matroid& m);

}  // namespace sc2
