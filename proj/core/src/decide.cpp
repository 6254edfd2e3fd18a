#include "sc2/decide.hpp"

#include "sc2/realize.hpp"
#include "sc2/splitting.hpp"

#include <functional>
#include <map>
#include <set>

namespace sc2 {

std::string to_string(Status s) {
  switch (s) {
    case Status::Embeddable:
      return "EMBEDDABLE";
    case Status::NotEmbeddable:
      return "NOT_EMBEDDABLE";
    case Status::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

bool simple_graph(const Multigraph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b || !seen.emplace(std::min(a, b), std::max(a, b)).second) return false;
  }
  return true;
}

// Faces of one connected piece of the complex span one component of the
// dual graph, and different pieces share no dual vertex: local surfaces never
// reach across pieces.
bool respects_complex_components(const Complex2& c, const Multigraph& g) {
  std::vector<int> parent(c.num_faces() + c.num_vertices());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  const int nf = static_cast<int>(c.num_faces());
  for (int f = 0; f < nf; ++f)
    for (const auto& t : c.faces()[f].walk) parent[find(f)] = find(nf + c.start_of(t));
  auto gc = vertex_components(g);
  std::map<int, int> piece_of_graph_component, graph_component_of_piece;
  for (int f = 0; f < nf; ++f) {
    int e = g.label_index(c.faces()[f].id);
    int comp = gc[g.edges[e].first], piece = find(f);
    auto a = piece_of_graph_component.emplace(comp, piece).first;
    auto b = graph_component_of_piece.emplace(piece, comp).first;
    if (a->second != piece || b->second != comp) return false;
  }
  return true;
}

Verdict inconclusive(std::string reason) {
  Verdict v;
  v.status = Status::Inconclusive;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

bool globally_3connected(const Matroid& m, const Multigraph* realization) {
  if (m.size() <= 16) return connectivity(m).globally_3connected;
  if (!realization) throw SizeGuardError("global 3-connectivity needs a realization above 16 elements");
  auto g = without_isolated_vertices(*realization);
  return simple_graph(g) && g.n >= 4 && is_k_connected(g, 3);
}

std::optional<Certificate> certificate_from_realization(const Complex2& c, const Multigraph& g) {
  try {
    auto oriented = orient_for_3flows(g, incidence_rows_on_graph(c, g));
    auto rotation = rotation_system_from_graph(c, oriented);
    if (!is_planar_rotation_system(c, rotation).planar) return std::nullopt;
    auto dual = dual_graph_of_rotation(c, rotation);
    if (!matroid_equals(cycle_matroid(dual), dual_matroid(c))) return std::nullopt;
    return Certificate{c, std::move(rotation), std::move(dual)};
  } catch (const EmbeddingError&) {
    return std::nullopt;
  }
}

Verdict decide_whitney(const Complex2& c, const DecideOptions& opts) {
  auto locality = is_local(c);
  if (!locality.local) return inconclusive("dual matroid not local");
  if (!homology_check(c).nullhomologous) return inconclusive("complex is not nullhomologous");
  if (!opts.simply_connected_asserted) return inconclusive("simple connectivity not asserted");

  const auto m = dual_matroid(c);
  auto first = realize_graph(m, RealizeMode::First);
  if (first.empty()) {
    Verdict v;
    v.status = Status::NotEmbeddable;
    v.reason = "dual matroid is not graphic";
    if (m.size() <= kDefaultScanBound) {
      auto scan = excluded_minor_scan(m);
      if (scan.graphic_consistent) throw std::logic_error("non-graphic matroid without an excluded minor");
      v.minor_witness = scan.witness;
    } else {
      v.minor_witness = excluded_minor_by_shrinking(m);
    }
    return v;
  }
  std::optional<Certificate> cert = certificate_from_realization(c, first.front().graph);
  std::size_t tried = 1;
  if (!cert) {
    for_each_labelled_realization(m, [&](const Multigraph& g) {
      if (++tried > opts.rotation_attempts) return false;
      cert = certificate_from_realization(c, g);
      return !cert;
    });
  }
  if (!cert) return inconclusive("no planar rotation system found from the realizations tried");
  Verdict v;
  v.status = Status::Embeddable;
  v.reason = "dual matroid is graphic";
  v.certificate = std::move(cert);
  return v;
}

Verdict decide_embeddability(const Complex2& c, const DecideOptions& opts) {
  const auto split = split_complex(c);
  Verdict w = decide_whitney(split.complex, opts);
  if (w.status != Status::Embeddable) {
    w.reason = "split complex: " + w.reason;
    return w;
  }
  const auto constraints = constraint_sets(c);
  auto bad = violated_constraints(constraints, w.certificate->dual_graph);
  if (bad.empty()) {
    w.reason = "split complex embeds and its dual graph meets every connectivity constraint";
    return w;
  }
  const auto m = dual_matroid(split.complex);
  if (globally_3connected(m, &w.certificate->dual_graph)) {
    Verdict v;
    v.status = Status::NotEmbeddable;
    v.reason = "connectivity constraints fail in the unique realization";
    v.violated = std::move(bad);
    return v;
  }

  // Several realizations: look for one meeting every constraint.
  Verdict v;
  v.outside_hypotheses = true;
  v.violated = bad;
  std::size_t seen = 0;
  bool capped = false;
  for_each_labelled_realization(m, [&](const Multigraph& g) {
    if (!respects_complex_components(split.complex, g)) return true;
    if (++seen > opts.realization_cap) {
      capped = true;
      return false;
    }
    auto fails = violated_constraints(constraints, g);
    std::vector<std::string> cells;
    for (const auto& k : fails) cells.push_back(k.cell);
    v.violation_map.push_back(cells);
    if (!fails.empty()) return true;
    auto cert = certificate_from_realization(split.complex, g);
    if (cert && violated_constraints(constraints, cert->dual_graph).empty()) {
      v.certificate = std::move(cert);
      return false;
    }
    return true;
  });
  if (v.certificate) {
    v.status = Status::Embeddable;
    v.reason = "a realization meets every connectivity constraint";
    v.violated.clear();
    return v;
  }
  if (capped) return inconclusive("realization enumeration cap reached");
  bool some_satisfiable = false;
  for (const auto& cells : v.violation_map) some_satisfiable = some_satisfiable || cells.empty();
  if (some_satisfiable) return inconclusive("a realization meets the constraints but no rotation system was built for it");
  v.status = Status::NotEmbeddable;
  v.reason = "no realization of the dual matroid meets every connectivity constraint";
  return v;
}

CertificateCheck check_certificate(const Complex2& original, const Certificate& cert) {
  CertificateCheck out;
  auto fail = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };
  try {
    validate_rotation_system(cert.complex, cert.rotation);
  } catch (const InputError& e) {
    return fail(e.what());
  }
  if (!complexes_isomorphic(cert.complex, original) &&
      !complexes_isomorphic(cert.complex, split_complex(original).complex))
    return fail("certificate complex is neither the complex nor its split complex");
  if (!is_planar_rotation_system(cert.complex, cert.rotation).planar) return fail("rotation system is not planar");
  Multigraph dual;
  try {
    dual = dual_graph_of_rotation(cert.complex, cert.rotation);
  } catch (const EmbeddingError& e) {
    return fail(e.what());
  }
  if (labelled_canonical_form(without_isolated_vertices(dual)) !=
      labelled_canonical_form(without_isolated_vertices(cert.dual_graph)))
    return fail("dual graph does not match the rotation system");
  if (!matroid_equals(cycle_matroid(dual), dual_matroid(cert.complex)))
    return fail("cycle matroid of the dual graph differs from the dual matroid");
  if (!homology_check(cert.complex).nullhomologous) return fail("certificate complex is not nullhomologous");
  auto bad = violated_constraints(constraint_sets(original), dual);
  if (!bad.empty()) return fail("constraint at '" + bad.front().cell + "' is not connected");
  out.valid = true;
  return out;
}

}  // namespace sc2
