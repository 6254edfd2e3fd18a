// One PASS/FAIL line per acceptance criterion. Time limits are wall-clock
// seconds and are part of each criterion.

#include "sc2/corpus.hpp"
#include "sc2/cyclic.hpp"
#include "sc2/decide.hpp"
#include "sc2/embedding.hpp"
#include "sc2/matroid.hpp"
#include "sc2/obstructions.hpp"
#include "sc2/realize.hpp"
#include "sc2/regular_rep.hpp"
#include "sc2/splitting.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace sc2;

namespace {

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<bool(std::ostream&)> body;
};

DecideOptions asserted() {
  DecideOptions o;
  o.simply_connected_asserted = true;
  return o;
}

bool cone_k5(std::ostream& note) {
  auto c = cone_over_complete_graph(5);
  auto m = dual_matroid(c);
  bool loops = m.size() == 10;
  for (int e = 0; e < static_cast<int>(m.size()); ++e) loops = loops && m.is_loop(e);
  auto loc = is_local(c);
  bool apex = !loc.local && std::find(loc.failing_vertices.begin(), loc.failing_vertices.end(), "a") !=
                                loc.failing_vertices.end();
  auto v = decide_whitney(c, asserted());
  note << "loops=" << loops << " apex_not_local=" << apex << " verdict=" << to_string(v.status) << "(" << v.reason
       << ")";
  return loops && apex && v.status == Status::Inconclusive && v.reason == "dual matroid not local";
}

bool closed_loop(std::ostream& note) {
  bool ok = true;
  std::vector<std::pair<const char*, Complex2>> cases = {{"tetrahedron", tetrahedron()},
                                                         {"octahedron", octahedron()},
                                                         {"grid-2x2x1", grid_complex(2, 2, 1)},
                                                         {"grid-2x2x2", grid_complex(2, 2, 2)}};
  for (const auto& [name, c] : cases) {
    auto v = decide_whitney(c, asserted());
    bool eq = v.certificate &&
              matroid_equals(cycle_matroid(dual_graph_of_rotation(c, v.certificate->rotation)), dual_matroid(c));
    note << name << "=" << eq << " ";
    ok = ok && eq;
  }
  return ok;
}

bool split_invariance(std::ostream& note) {
  std::vector<Complex2> all;
  for (auto& [name, c] : standard_corpus()) all.push_back(c);
  for (std::uint32_t s = 1; s <= 100; ++s) all.push_back(random_complex(s, 12));
  int invariant = 0, order_free = 0;
  for (const auto& c : all) {
    invariant += matroid_equals(dual_matroid(c), dual_matroid(split_complex(c).complex));
    auto base = edge_split_complex(c).complex;
    bool same = true;
    for (std::uint32_t seed = 1; seed <= 5; ++seed)
      same = same && complexes_isomorphic(edge_split_complex(c, seed * 7919u).complex, base);
    order_free += same;
  }
  note << "complexes=" << all.size() << " invariant=" << invariant << " order_independent=" << order_free;
  return invariant == static_cast<int>(all.size()) && order_free == static_cast<int>(all.size());
}

bool whitney_pipeline(std::ostream& note) {
  bool ok = true;
  for (const auto& c : {tetrahedron(), octahedron()}) {
    auto v = decide_embeddability(c, asserted());
    if (v.status != Status::Embeddable || !v.certificate) return false;
    auto p = is_planar_rotation_system(v.certificate->complex, v.certificate->rotation);
    for (const auto& vg : p.vertices) {
      const auto& r = vg.report;
      ok = ok && r.components == 1 && r.vertices - r.edges + r.faces == 2;
    }
    auto rs = realize_graph(dual_matroid(c), RealizeMode::First);
    auto rows = incidence_rows_on_graph(c, rs.front().graph);
    auto oriented = orient_for_3flows(rs.front().graph, rows);
    for (const auto& row : rows) ok = ok && is_3flow(oriented, row);
    note << "V-E+F=2 and Kirchhoff mod 3 on " << c.num_faces() << "-face complex: " << ok << " ";
  }
  return ok;
}

bool obstruction_facts(std::ostream& note) {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    auto cm = make_Mn_with_constraints(n);
    bool not_met = !constraints_satisfiable(cm).satisfiable;
    bool drop = true, del = true, con = true;
    for (std::size_t i = 0; i < cm.constraints.size(); ++i) {
      auto d = cm;
      d.constraints.erase(d.constraints.begin() + static_cast<long>(i));
      drop = drop && constraints_satisfiable(d).satisfiable;
    }
    for (const auto& id : cm.matroid.ground()) {
      del = del && constraints_satisfiable(restricted_minor(cm, {id}, {})).satisfiable;
      con = con && constraints_satisfiable(constraint_minor(cm, {}, {id})).satisfiable;
    }
    note << "n=" << n << ":" << not_met << drop << del << con << " ";
    ok = ok && not_met && drop && del && con;
  }
  return ok;
}

bool an_family(std::ostream& note) {
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    auto an = generate_An(n, AnMode::Adjusted);
    bool mn = matroid_equals(dual_matroid(an), make_Mn_with_constraints(n).matroid);
    bool nh = homology_check(split_complex(an).complex).nullhomologous;
    auto v = decide_embeddability(an, asserted());
    bool ne = v.status == Status::NotEmbeddable && !v.violated.empty();
    note << "n=" << n << ":" << mn << nh << ne << " ";
    ok = ok && mn && nh && ne;
  }
  return ok;
}

bool appendix_a(std::ostream& note) {
  auto c = two_hub_complex();
  auto lazy = all_lazy_edge_splits(c);
  bool two = lazy.size() == 2 && !complexes_isomorphic(lazy[0].complex, lazy[1].complex);
  auto base = edge_split_complex(c).complex;
  bool unique = true;
  for (std::uint32_t seed = 1; seed <= 20; ++seed)
    unique = unique && complexes_isomorphic(edge_split_complex(c, seed).complex, base);
  note << "lazy_results=" << lazy.size() << " edge_split_order_unique=" << unique;
  return two && unique;
}

bool appendix_b(std::ostream& note) {
  auto ex = IntegerMatrix::from_rows({{1, 1}, {1, -1}, {1, 0}, {0, -1}}, 2);
  bool regular = is_regular_representation(ex).regular;
  bool tu = is_totally_unimodular(ex);
  std::mt19937 rng(20240521);
  std::uniform_int_distribution<int> rows(1, 8), cols(1, 6), entry(-3, 3);
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t r = rows(rng), c = cols(rng);
    IntRows m(r, IntRow(c));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    auto a = IntegerMatrix::from_rows(m, c);
    bool full = rational_rank(m, c) == static_cast<int>(c);
    if (full)
      for (int p : primes_up_to(hadamard_bound(a).convert_to<long>()))
        if (rank_mod_p(m, c, p) != static_cast<int>(c)) {
          full = false;
          break;
        }
    agree += spans_integer_lattice(a) == full;
  }
  note << "example regular=" << regular << " tu=" << tu << " lattice_agreement=" << agree << "/200";
  return regular && !tu && agree == 200;
}

bool cyclic_lemmas(std::ostream& note) {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    auto a = verify_interval_lemma(n), b = verify_improving_lemma(n);
    note << "n=" << n << ":" << a.cases << "/" << b.cases << " ";
    ok = ok && a.failures == 0 && b.failures == 0 && a.cases > 0;
  }
  return ok;
}

bool fig1_scan(std::ostream& note) {
  auto grid = grid_complex(4, 2, 1);
  bool base = decide_embeddability(grid, asserted()).status == Status::Embeddable;
  auto pairs = grid_edge_pairs(grid).pairs;
  std::vector<Status> status(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pairs.size();)
      status[i] = decide_embeddability(identify_edge_pair(grid, pairs[i].first, pairs[i].second), asserted()).status;
  };
  std::vector<std::thread> pool;
  unsigned jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int negative = 0, inconclusive = 0;
  std::ostringstream list;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (status[i] == Status::NotEmbeddable) {
      ++negative;
      list << " " << pairs[i].first << "/" << pairs[i].second;
    }
    inconclusive += status[i] == Status::Inconclusive;
  }
  note << "grid=" << (base ? "EMBEDDABLE" : "?") << " pairs=" << pairs.size() << " not_embeddable=" << negative
       << " inconclusive=" << inconclusive << " :" << list.str();
  return base && negative > 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cone over K5 is not local", 1, cone_k5},
      {2, "dual graph cycle matroid equals dual matroid", 10, closed_loop},
      {3, "split invariance and edge-split order independence", 60, split_invariance},
      {4, "Whitney pipeline certificates", 5, whitney_pipeline},
      {5, "obstruction matroid facts for n=3..8", 60, obstruction_facts},
      {6, "A_n complexes are not embeddable", 60, an_family},
      {7, "two lazy split complexes, unique edge split", 10, appendix_a},
      {8, "regular representation and lattice spanning", 30, appendix_b},
      {9, "cyclic order lemmas up to size 8", 120, cyclic_lemmas},
      {10, "grid edge-pair identification scan", 600, fig1_scan},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.limit_seconds;
    bool pass = ok && in_time;
    failed += !pass;
    std::printf("criterion %2d: %s  %-50s %8.3fs (limit %gs)%s  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                c.limit_seconds, in_time ? "" : " TIMEOUT", note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
