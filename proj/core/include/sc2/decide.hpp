#pragma once

// Embeddability verdicts. decide_whitney applies the graphic-matroid test to
// simply connected complexes with local dual matroid; decide_embeddability
// reduces to the split complex and adds the dual graph connectivity
// constraints.

#include "sc2/embedding.hpp"
#include "sc2/matroid.hpp"
#include "sc2/minor_scan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sc2 {

enum class Status { Embeddable, NotEmbeddable, Inconclusive };
std::string to_string(Status s);

struct Certificate {
  Complex2 complex;  // the complex carrying the rotation system
  RotationSystem rotation;
  Multigraph dual_graph;  // edge labels are face ids
};

struct Verdict {
  Status status = Status::Inconclusive;
  std::string reason;
  std::optional<Certificate> certificate;
  std::optional<MinorWitness> minor_witness;
  /// Constraints failing in the graph that was checked first.
  std::vector<Constraint> violated;
  /// Realizations examined when quantifying over all of them, and for each
  /// one the cells whose constraint failed.
  std::vector<std::vector<std::string>> violation_map;
  /// Set when the dual matroid is not globally 3-connected, so the verdict
  /// quantified over every realization instead of using a unique one.
  bool outside_hypotheses = false;
};

struct DecideOptions {
  bool simply_connected_asserted = false;
  /// Realizations tried when the first one does not give a planar rotation.
  std::size_t rotation_attempts = 64;
  /// Realizations examined when checking constraints.
  std::size_t realization_cap = 200000;
};

Verdict decide_whitney(const Complex2& c, const DecideOptions& opts);
Verdict decide_embeddability(const Complex2& c, const DecideOptions& opts);

/// Global 3-connectivity by exhaustive scan on small ground sets; above
/// that, read off a realization (simple, 3-connected graph).
bool globally_3connected(const Matroid& m, const Multigraph* realization);

/// Builds a certificate from a realization g: orientation, rotation system,
/// planarity, and a dual graph whose cycle matroid is the dual matroid.
/// Returns nothing if some step fails.
std::optional<Certificate> certificate_from_realization(const Complex2& c, const Multigraph& g);

struct CertificateCheck {
  bool valid = false;
  std::string failure;
};

/// Re-validates a certificate for `original` from its parts alone.
CertificateCheck check_certificate(const Complex2& original, const Certificate& cert);

}  // namespace sc2
