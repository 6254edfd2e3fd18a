#include "sc2/minor_scan.hpp"

#include "sc2/realize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sc2 {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Matroid bond_matroid_of(int vertices, const std::vector<std::pair<int, int>>& edges) {
  IntRows inc(vertices, IntRow(edges.size(), 0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].first][e] = -1;
    inc[edges[e].second][e] = 1;
  }
  return Matroid::from_rows(Field::prime(3), numbered(edges.size()), inc);
}

std::vector<std::vector<int>> size_profile(const std::vector<std::vector<int>>& circuits, std::size_t n) {
  std::vector<std::vector<int>> sig(n);
  for (const auto& c : circuits)
    for (int x : c) sig[x].push_back(static_cast<int>(c.size()));
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

}  // namespace

const std::vector<NamedMatroid>& excluded_minors_for_graphic() {
  static const std::vector<NamedMatroid> targets = [] {
    std::vector<NamedMatroid> t;
    t.push_back({"U24", Matroid::from_rows(Field::prime(3), numbered(4), {{1, 0, 1, 1}, {0, 1, 1, -1}})});
    IntRows fano = {{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}};
    auto f7 = Matroid::column_matroid(Field::prime(2), numbered(7), fano);
    t.push_back({"F7", f7});
    t.push_back({"F7*", f7.dual()});
    std::vector<std::pair<int, int>> k5, k33;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) k33.emplace_back(a, b);
    t.push_back({"M(K5)*", bond_matroid_of(5, k5)});
    t.push_back({"M(K33)*", bond_matroid_of(6, k33)});
    return t;
  }();
  return targets;
}

bool matroid_isomorphic(const Matroid& a, const Matroid& b, std::size_t bound) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  const std::size_t n = a.size();
  auto ca = a.circuits(bound), cb = b.circuits(bound);
  if (ca.size() != cb.size()) return false;
  auto sa = size_profile(ca, n), sb = size_profile(cb, n);
  {
    auto xa = sa, xb = sb;
    std::sort(xa.begin(), xa.end());
    std::sort(xb.begin(), xb.end());
    if (xa != xb) return false;
  }
  std::set<std::vector<int>> target(cb.begin(), cb.end());
  // Circuits of a grouped by their largest element, checked once complete.
  std::vector<std::vector<const std::vector<int>*>> closing(n);
  for (const auto& c : ca) closing[c.back()].push_back(&c);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sa[k] != sb[w]) continue;
      map[k] = static_cast<int>(w);
      bool ok = true;
      for (const auto* c : closing[k]) {
        std::vector<int> image;
        for (int x : *c) image.push_back(map[x]);
        std::sort(image.begin(), image.end());
        if (!target.count(image)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[w] = true;
        if (extend(k + 1)) return true;
        used[w] = false;
      }
      map[k] = -1;
    }
    return false;
  };
  return extend(0);
}

MinorScanVerdict excluded_minor_scan(const Matroid& m, std::size_t bound) {
  const std::size_t n = m.size();
  if (n > bound) throw SizeGuardError("excluded-minor scan refused above " + std::to_string(bound) + " elements");
  MinorScanVerdict verdict;
  const int rm = m.rank();
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  for (const auto& target : excluded_minors_for_graphic()) {
    const std::size_t t = target.matroid.size();
    const int contract_size = rm - target.matroid.rank();
    if (t > n || contract_size < 0 || contract_size > static_cast<int>(n - t)) continue;
    auto target_circuits = target.matroid.circuits().size();
    std::vector<int> keep;
    std::function<bool(std::size_t)> choose_keep;
    std::function<bool(const std::vector<int>&, std::size_t, std::vector<int>&)> choose_contract;
    choose_contract = [&](const std::vector<int>& rest, std::size_t start, std::vector<int>& con) -> bool {
      if (static_cast<int>(con.size()) == contract_size) {
        std::vector<int> del;
        for (int x : rest)
          if (!std::binary_search(con.begin(), con.end(), x)) del.push_back(x);
        std::vector<int> remaining;
        std::set_difference(all.begin(), all.end(), del.begin(), del.end(), std::back_inserter(remaining));
        if (m.rank(remaining) != rm) return false;  // deletion set must be coindependent
        auto minor = m.minor(del, con);
        if (minor.circuits().size() != target_circuits) return false;
        if (!matroid_isomorphic(minor, target.matroid)) return false;
        verdict.graphic_consistent = false;
        verdict.witness = MinorWitness{target.name, m.ids(del), m.ids(con)};
        return true;
      }
      for (std::size_t i = start; i < rest.size(); ++i) {
        con.push_back(rest[i]);
        if (m.rank(con) == static_cast<int>(con.size()) && choose_contract(rest, i + 1, con)) return true;
        con.pop_back();
      }
      return false;
    };
    choose_keep = [&](std::size_t start) -> bool {
      if (keep.size() == t) {
        std::vector<int> rest, con;
        std::set_difference(all.begin(), all.end(), keep.begin(), keep.end(), std::back_inserter(rest));
        return choose_contract(rest, 0, con);
      }
      for (std::size_t i = start; i < n; ++i) {
        keep.push_back(static_cast<int>(i));
        if (choose_keep(i + 1)) return true;
        keep.pop_back();
      }
      return false;
    };
    if (choose_keep(0)) return verdict;
  }
  return verdict;
}

std::optional<MinorWitness> excluded_minor_by_shrinking(const Matroid& m) {
  if (is_graphic(m)) return std::nullopt;
  Matroid cur = m;
  MinorWitness w;
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& id : cur.ground()) {
      if (auto d = cur.minor_ids({id}, {}); !is_graphic(d)) {
        w.deleted.push_back(id);
        cur = std::move(d);
        progress = true;
        break;
      }
      if (auto c = cur.minor_ids({}, {id}); !is_graphic(c)) {
        w.contracted.push_back(id);
        cur = std::move(c);
        progress = true;
        break;
      }
    }
  }
  for (const auto& target : excluded_minors_for_graphic())
    if (target.matroid.size() == cur.size() && matroid_isomorphic(cur, target.matroid)) {
      w.name = target.name;
      return w;
    }
  throw std::logic_error("minimal non-graphic minor is not an excluded minor");
}

}  // namespace sc2
