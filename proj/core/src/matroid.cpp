#include "sc2/matroid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace sc2 {

namespace {

template <class K>
Rows<K> to_field(const K& k, const IntRows& a) {
  Rows<K> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    std::vector<typename K::T> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(k.from_int(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> complement(std::size_t n, const std::vector<int>& s) {
  std::vector<bool> in(n, false);
  for (int x : s) in[x] = true;
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(static_cast<int>(i));
  return out;
}

template <class K>
std::string entry_string(const K& k, const typename K::T& x) {
  if constexpr (std::is_same_v<K, PrimeOps>)
    return std::to_string(k.lift(x));
  else
    return x.str();
}

}  // namespace

Matroid Matroid::from_rows(Field field, std::vector<std::string> ground, const IntRows& a) {
  for (const auto& row : a)
    if (row.size() != ground.size()) throw InputError("matrix width does not match ground set size");
  if (field.rational()) return from_field_rows<RationalOps>(field, std::move(ground), to_field(RationalOps{}, a));
  return from_field_rows<PrimeOps>(field, std::move(ground), to_field(PrimeOps{field.p}, a));
}

Matroid Matroid::column_matroid(Field field, std::vector<std::string> ground, const IntRows& a) {
  return from_rows(field, std::move(ground), a).dual();
}

int Matroid::index(const std::string& id) const {
  auto it = std::find(ground_.begin(), ground_.end(), id);
  if (it == ground_.end()) throw InputError("unknown element id '" + id + "'");
  return static_cast<int>(it - ground_.begin());
}

std::vector<int> Matroid::indices(const std::vector<std::string>& ids) const {
  std::vector<int> out;
  for (const auto& id : ids) out.push_back(index(id));
  return out;
}

std::vector<std::string> Matroid::ids(const std::vector<int>& idx) const {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(ground_.at(i));
  return out;
}

int Matroid::column_rank(const std::vector<int>& s) const {
  if (s.empty() || pivots_.empty()) return 0;
  return visit([&](const auto& k, const auto& rows) { return sc2::column_rank(k, rows, s); });
}

int Matroid::rank(const std::vector<int>& s) const {
  return static_cast<int>(s.size()) - representation_rank() + column_rank(complement(size(), s));
}

bool Matroid::is_coloop(int e) const {
  auto rest = complement(size(), {e});
  return rank(rest) < rank();
}

Matroid Matroid::dual() const {
  return visit([&](const auto& k, const auto& rows) {
    using K = std::decay_t<decltype(k)>;
    auto kernel = kernel_basis(k, rows, size());
    return from_field_rows<K>(field_, ground_, std::move(kernel));
  });
}

Matroid Matroid::minor(const std::vector<int>& del, const std::vector<int>& con) const {
  std::vector<bool> gone(size(), false);
  for (int d : del) {
    if (d < 0 || d >= static_cast<int>(size())) throw InputError("minor: element index out of range");
    gone[d] = true;
  }
  for (int c : con) {
    if (c < 0 || c >= static_cast<int>(size())) throw InputError("minor: element index out of range");
    if (gone[c]) throw InputError("minor: delete and contract sets overlap at '" + ground_[c] + "'");
    gone[c] = true;
  }
  std::vector<int> keep;
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < size(); ++i)
    if (!gone[i]) {
      keep.push_back(static_cast<int>(i));
      ground.push_back(ground_[i]);
    }
  // Deleting in this matroid contracts columns of the representation;
  // contracting here drops columns.
  return visit([&](const auto& k, const auto& rows) {
    using K = std::decay_t<decltype(k)>;
    auto reduced = contract_columns(k, rows, size(), del, keep);
    return from_field_rows<K>(field_, ground, std::move(reduced));
  });
}

Matroid Matroid::minor_ids(const std::vector<std::string>& del, const std::vector<std::string>& con) const {
  return minor(indices(del), indices(con));
}

Matroid Matroid::restrict_to(const std::vector<int>& keep) const { return minor(complement(size(), keep), {}); }

Matroid Matroid::relabel(std::vector<std::string> ground) const {
  if (ground.size() != ground_.size()) throw InputError("relabel: size mismatch");
  Matroid m = *this;
  m.ground_ = std::move(ground);
  return m;
}

std::vector<std::vector<int>> Matroid::circuits(std::size_t bound) const {
  if (size() > bound)
    throw SizeGuardError("circuit enumeration refused: " + std::to_string(size()) + " elements exceed bound " +
                         std::to_string(bound));
  const int r = representation_rank();
  std::set<std::vector<int>> found;
  if (r == 0) return {};
  // Each circuit is the support of the (unique up to scalar) row-space
  // vector vanishing on an independent set of r-1 columns.
  return visit([&](const auto& k, const auto& rows) {
    using K = std::decay_t<decltype(k)>;
    const std::size_t n = size();
    std::vector<int> chosen;
    auto emit = [&]() {
      // Solve x^T rows[:, chosen] = 0 for x in K^r.
      Rows<K> t(chosen.size(), std::vector<typename K::T>(r, k.zero()));
      for (std::size_t i = 0; i < chosen.size(); ++i)
        for (int j = 0; j < r; ++j) t[i][j] = rows[j][chosen[i]];
      auto ker = kernel_basis(k, t, static_cast<std::size_t>(r));
      if (ker.size() != 1) return;  // chosen set dependent
      std::vector<int> support;
      for (std::size_t c = 0; c < n; ++c) {
        auto acc = k.zero();
        for (int j = 0; j < r; ++j) acc = k.add(acc, k.mul(ker[0][j], rows[j][c]));
        if (!k.is_zero(acc)) support.push_back(static_cast<int>(c));
      }
      found.insert(std::move(support));
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (static_cast<int>(chosen.size()) == r - 1) {
        emit();
        return;
      }
      for (std::size_t c = start; c < n; ++c) {
        chosen.push_back(static_cast<int>(c));
        if (sc2::column_rank(k, rows, chosen) == static_cast<int>(chosen.size())) rec(c + 1);
        chosen.pop_back();
      }
    };
    rec(0);
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  });
}

std::vector<std::vector<int>> Matroid::cocircuits(std::size_t bound) const { return dual().circuits(bound); }

std::vector<std::vector<bool>> Matroid::support_pattern() const {
  return visit([&](const auto& k, const auto& rows) {
    std::vector<std::vector<bool>> out;
    for (const auto& row : rows) {
      std::vector<bool> r(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) r[j] = !k.is_zero(row[j]);
      out.push_back(std::move(r));
    }
    return out;
  });
}

std::vector<std::vector<std::string>> Matroid::matrix_strings() const {
  return visit([&](const auto& k, const auto& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : rows) {
      std::vector<std::string> r;
      for (const auto& x : row) r.push_back(entry_string(k, x));
      out.push_back(std::move(r));
    }
    return out;
  });
}

std::vector<std::vector<int>> Matroid::components() const {
  const std::size_t n = size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto pattern = support_pattern();
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pattern[i][j]) parent[find(static_cast<int>(j))] = find(pivots_[i]);
  std::map<int, std::vector<int>> groups;
  for (std::size_t j = 0; j < n; ++j) groups[find(static_cast<int>(j))].push_back(static_cast<int>(j));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Permutation taking b's column order to a's ground order.
std::vector<int> alignment(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) throw GroundMismatch("ground sets differ in size");
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < b.size(); ++i) pos[b.ground()[i]] = static_cast<int>(i);
  std::vector<int> perm;
  for (const auto& id : a.ground()) {
    auto it = pos.find(id);
    if (it == pos.end()) throw GroundMismatch("element '" + id + "' missing from second ground set");
    perm.push_back(it->second);
  }
  return perm;
}

bool equals_ternary(const Matroid& a, const Matroid& b, const std::vector<int>& perm) {
  if (a.representation_rank() != b.representation_rank()) return false;
  const PrimeOps k{a.field().p};
  const std::size_t n = a.size();
  // b's rows with columns in a's order.
  Matroid::PrimeRows rb;
  for (const auto& row : b.prime_rows()) {
    std::vector<PrimeOps::T> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = row[perm[j]];
    rb.push_back(std::move(r));
  }
  const auto& ra = a.prime_rows();
  const auto& piv = a.pivots();
  if (rb.empty()) return ra.empty();
  std::vector<int> order = piv;
  for (int j : complement(n, piv)) order.push_back(j);
  auto pb = rref(k, rb, n, order);
  if (pb != piv) return false;
  const int r = static_cast<int>(piv.size());
  auto free_cols = complement(n, piv);
  for (int i = 0; i < r; ++i)
    for (int j : free_cols)
      if (k.is_zero(ra[i][j]) != k.is_zero(rb[i][j])) return false;
  // Find diagonal scalings: ra[i][j] = rs[i] * rb[i][j] * cs[j].
  std::vector<PrimeOps::T> rs(r, 0), cs(n, 0);
  for (int start = 0; start < r; ++start) {
    if (rs[start] != 0) continue;
    rs[start] = 1;
    std::vector<std::pair<bool, int>> queue{{true, start}};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [is_row, idx] = queue[q];
      if (is_row) {
        for (int j : free_cols) {
          if (k.is_zero(ra[idx][j]) || cs[j] != 0) continue;
          cs[j] = k.mul(ra[idx][j], k.inv(k.mul(rs[idx], rb[idx][j])));
          queue.emplace_back(false, j);
        }
      } else {
        for (int i = 0; i < r; ++i) {
          if (k.is_zero(ra[i][idx]) || rs[i] != 0) continue;
          rs[i] = k.mul(ra[i][idx], k.inv(k.mul(rb[i][idx], cs[idx])));
          queue.emplace_back(true, i);
        }
      }
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j : free_cols)
      if (!k.is_zero(ra[i][j]) && ra[i][j] != k.mul(rs[i], k.mul(rb[i][j], cs[j]))) return false;
  return true;
}

}  // namespace

bool matroid_equals(const Matroid& a, const Matroid& b) {
  auto perm = alignment(a, b);
  if (a.rank() != b.rank()) return false;
  if (a.field() == b.field() && (a.field().p == 2 || a.field().p == 3)) return equals_ternary(a, b, perm);
  auto ca = a.circuits();
  auto cb = b.circuits();
  std::set<std::vector<int>> sa(ca.begin(), ca.end()), sb;
  for (const auto& c : cb) {
    std::vector<int> mapped;
    // perm[j] = position in b of a's element j; invert.
    for (int x : c) mapped.push_back(static_cast<int>(std::find(perm.begin(), perm.end(), x) - perm.begin()));
    std::sort(mapped.begin(), mapped.end());
    sb.insert(mapped);
  }
  return sa == sb;
}

bool matroid_equals_bruteforce(const Matroid& a, const Matroid& b, std::size_t bound) {
  auto perm = alignment(a, b);
  const std::size_t n = a.size();
  if (n > bound) throw SizeGuardError("brute-force equality refused above " + std::to_string(bound) + " elements");
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> sa, sb;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1UL) {
        sa.push_back(static_cast<int>(j));
        sb.push_back(perm[j]);
      }
    if (a.rank(sa) != b.rank(sb)) return false;
  }
  return true;
}

Matroid dual_matroid(const Complex2& c, Field field) {
  std::vector<std::string> ground;
  for (const auto& f : c.faces()) ground.push_back(f.id);
  return Matroid::from_rows(field, std::move(ground), incidence_matrix(c));
}

Matroid link_dual_matroid(const Complex2& c, int v, Field field) {
  auto l = link_graph(c, v);
  auto faces = c.faces_at_vertex(v);
  std::map<int, int> col;
  std::vector<std::string> ground;
  for (int f : faces) {
    col[f] = static_cast<int>(ground.size());
    ground.push_back(c.faces()[f].id);
  }
  IntRows a(l.nodes.size(), IntRow(ground.size(), 0));
  for (const auto& link : l.links) {
    a[link.in][col[link.face]] += 1;
    a[link.out][col[link.face]] -= 1;
  }
  return Matroid::from_rows(field, std::move(ground), a);
}

Matroid cycle_matroid(const Multigraph& g, Field field) {
  IntRows b(g.n, IntRow(g.edges.size(), 0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    b[u][e] -= 1;
    b[v][e] += 1;
  }
  return Matroid::from_rows(field, g.labels, b).dual();
}

ConnectivityReport connectivity(const Matroid& m, std::size_t bound) {
  const std::size_t n = m.size();
  if (n > bound) throw SizeGuardError("connectivity scan refused above " + std::to_string(bound) + " elements");
  ConnectivityReport rep;
  rep.connected = m.components().size() <= 1;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const int rn = m.column_rank(all), rm = m.rank();
  if (n >= 4) {
    // Element 0 always on the left side to avoid listing each partition twice.
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
      std::vector<int> left{0}, right;
      for (std::size_t j = 1; j < n; ++j) ((mask >> (j - 1)) & 1UL ? left : right).push_back(static_cast<int>(j));
      if (left.size() < 2 || right.size() < 2) continue;
      bool by_columns = m.column_rank(left) + m.column_rank(right) <= rn + 1;
      bool by_matroid = m.rank(left) + m.rank(right) <= rm + 1;
      if (by_columns != by_matroid)
        throw std::logic_error("connectivity: column-rank and matroid-rank separations disagree");
      if (by_columns) rep.two_separations.emplace_back(left, right);
    }
  }
  rep.globally_3connected = rep.connected && rep.two_separations.empty();
  return rep;
}

LocalityReport is_local(const Complex2& c) {
  LocalityReport rep;
  auto m = dual_matroid(c);
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto faces = c.faces_at_vertex(static_cast<int>(v));
    auto mv = link_dual_matroid(c, static_cast<int>(v));
    if (!matroid_equals(mv, m.restrict_to(faces))) {
      rep.local = false;
      rep.failing_vertices.push_back(c.vertices()[v]);
    }
  }
  return rep;
}

}  // namespace sc2
