#include "sc2/obstructions.hpp"

#include "sc2/decide.hpp"
#include "sc2/realize.hpp"
#include "sc2/splitting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sc2 {

namespace {

std::string element(int i) { return "e" + std::to_string(i); }

std::vector<int> violated(const ConstrainedMatroid& cm, const Multigraph& g) {
  std::vector<int> out;
  for (std::size_t k = 0; k < cm.constraints.size(); ++k) {
    std::vector<int> edges;
    for (const auto& id : cm.constraints[k]) edges.push_back(g.label_index(id));
    if (!edge_set_connected(g, edges)) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
  return s;
}

std::set<std::vector<std::string>> as_set(std::vector<std::vector<std::string>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  return {sets.begin(), sets.end()};
}

}  // namespace

ConstrainedMatroid make_Mn_with_constraints(int n) {
  if (n < 3) throw InputError("M_n needs n >= 3");
  std::vector<std::string> ground;
  for (int i = 1; i <= n; ++i) ground.push_back(element(i));
  ground.push_back("l");
  IntRows rows(2, IntRow(n + 1, 0));
  for (int i = 0; i < n; ++i) rows[0][i] = 1;
  rows[1][n] = 1;
  ConstrainedMatroid cm{Matroid::from_rows(Field::prime(3), ground, rows), {}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> x;
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i % n + 1) x.push_back(element(j));
    x.push_back("l");
    cm.constraints.push_back(std::move(x));
  }
  return cm;
}

std::vector<Multigraph> enumerate_graph_realizations(const Matroid& m, std::size_t bound) {
  std::vector<Multigraph> out;
  for (auto& r : realize_graph(m, RealizeMode::All, bound)) out.push_back(std::move(r.graph));
  return out;
}

SatisfiabilityReport constraints_satisfiable(const ConstrainedMatroid& cm, bool all, std::size_t bound) {
  if (cm.matroid.size() > bound)
    throw SizeGuardError("constraint satisfiability refused above " + std::to_string(bound) + " elements");
  for (const auto& x : cm.constraints)
    for (const auto& id : x) cm.matroid.index(id);  // throws on unknown ids
  SatisfiabilityReport r;
  for_each_labelled_realization(cm.matroid, [&](const Multigraph& g) {
    ++r.realizations;
    auto bad = violated(cm, g);
    if (bad.empty() && !r.satisfiable) {
      r.satisfiable = true;
      r.witness = g;
    }
    r.violation_map.push_back(std::move(bad));
    return all || !r.satisfiable;
  });
  if (r.satisfiable && !all) r.violation_map.clear();
  return r;
}

ConstrainedMatroid restricted_minor(const ConstrainedMatroid& cm, const std::vector<std::string>& del,
                                    const std::vector<std::string>& con) {
  std::set<std::string> gone(del.begin(), del.end());
  for (const auto& x : con)
    if (!gone.insert(x).second) throw InputError("element '" + x + "' both deleted and contracted");
  ConstrainedMatroid out{cm.matroid.minor_ids(del, con), {}};
  for (const auto& x : cm.constraints) {
    std::vector<std::string> kept;
    for (const auto& id : x)
      if (!gone.count(id)) kept.push_back(id);
    out.constraints.push_back(std::move(kept));
  }
  return out;
}

ConstrainedMatroid constraint_minor(const ConstrainedMatroid& cm, const std::vector<std::string>& del,
                                    const std::vector<std::string>& con) {
  for (const auto& id : del)
    for (const auto& x : cm.constraints)
      if (std::find(x.begin(), x.end(), id) != x.end())
        throw InputError("element '" + id + "' lies in a constraint and cannot be deleted");
  return restricted_minor(cm, del, con);
}

std::vector<std::vector<std::string>> nontrivial_constraints(const Complex2& c) {
  const auto m = dual_matroid(c);
  std::set<std::vector<std::string>> out;
  for (const auto& k : constraint_sets(c)) {
    if (k.faces.size() < 2) continue;
    auto s = m.indices(k.faces);
    const int size = static_cast<int>(s.size());
    bool circuit = m.rank(s) == size - 1;
    for (std::size_t i = 0; circuit && i < s.size(); ++i) {
      auto t = s;
      t.erase(t.begin() + static_cast<long>(i));
      circuit = m.rank(t) == size - 1;
    }
    if (circuit) continue;
    auto faces = k.faces;
    std::sort(faces.begin(), faces.end());
    out.insert(std::move(faces));
  }
  return {out.begin(), out.end()};
}

AnFactsReport verify_An_facts(int n) {
  if (n < 3 || n > 8) throw SizeGuardError("verify_An_facts supports 3 <= n <= 8");
  AnFactsReport report;
  report.n = n;
  const auto cm = make_Mn_with_constraints(n);
  auto add = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    auto r = constraints_satisfiable(cm);
    add("not_met", !r.satisfiable, std::to_string(r.realizations) + " labelled realizations, none meets every X[i,n]");
  }
  {
    std::vector<std::string> failures;
    for (int i = 0; i < n; ++i) {
      auto dropped = cm;
      dropped.constraints.erase(dropped.constraints.begin() + i);
      if (!constraints_satisfiable(dropped).satisfiable) failures.push_back("X[" + std::to_string(i + 1) + "]");
    }
    add("met_rem.drop_one", failures.empty(), failures.empty() ? "every one-constraint removal is satisfiable"
                                                               : "unsatisfiable after dropping " + join(failures));
  }
  for (bool contract : {false, true}) {
    std::vector<std::string> failures;
    for (const auto& e : cm.matroid.ground()) {
      auto minor = contract ? restricted_minor(cm, {}, {e}) : restricted_minor(cm, {e}, {});
      if (!constraints_satisfiable(minor).satisfiable) failures.push_back(e);
    }
    add(contract ? "met_rem.contract" : "met_rem.delete", failures.empty(),
        failures.empty() ? "satisfiable for every element" : "unsatisfiable for " + join(failures));
  }

  const auto an = generate_An(n, AnMode::Adjusted);
  const auto an_prime = generate_An(n, AnMode::Unidentified);
  add("dual_matroid_is_Mn", matroid_equals(dual_matroid(an), cm.matroid), "dual matroid of the adjusted A_n");
  add("split_is_An_prime", complexes_isomorphic(split_complex(an).complex, an_prime),
      "split complex of A_n against the unidentified complex");
  add("An_prime_nullhomologous", homology_check(an_prime).nullhomologous, "H_1 of the split complex");
  {
    auto stated = as_set(cm.constraints);
    auto adjusted = as_set(nontrivial_constraints(an));
    auto literal = as_set(nontrivial_constraints(generate_An(n, AnMode::Literal)));
    std::ostringstream os;
    os << "adjusted mode " << (adjusted == stated ? "reproduces" : "differs from") << " X[i,n]; literal mode "
       << (literal == stated ? "reproduces" : "differs from") << " X[i,n]";
    add("constraints_match_X", adjusted == stated, os.str());
  }
  {
    DecideOptions opts;
    opts.simply_connected_asserted = true;
    auto v = decide_embeddability(an, opts);
    add("An_not_embeddable", v.status == Status::NotEmbeddable, to_string(v.status) + ": " + v.reason);
  }
  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(), [](const FactCheck& c) { return c.pass; });
  return report;
}

}  // namespace sc2
