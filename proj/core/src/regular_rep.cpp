#include "sc2/regular_rep.hpp"

#include "sc2/complex.hpp"

#include <algorithm>
#include <functional>

namespace sc2 {

namespace {

std::vector<std::string> labels_or_default(const IntegerMatrix& a) {
  if (!a.col_labels.empty()) return a.col_labels;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.cols; ++i) out.push_back(std::to_string(i));
  return out;
}

BigInt ceil_sqrt(const BigInt& x) {
  BigInt s = boost::multiprecision::sqrt(x);
  return s * s < x ? s + 1 : s;
}

BigInt content(const IntRow& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

// Nonzero solution space over Q of "row combination vanishing off `support`",
// restricted to the support columns.
std::vector<std::vector<Rational>> row_vectors_on(const IntegerMatrix& a, const std::vector<int>& support) {
  std::vector<bool> in(a.cols, false);
  for (int s : support) in[s] = true;
  std::vector<int> outside, order;
  for (std::size_t c = 0; c < a.cols; ++c)
    if (!in[c]) outside.push_back(static_cast<int>(c));
  RationalOps k;
  Rows<RationalOps> m;
  for (const auto& r : a.rows) {
    std::vector<Rational> row;
    for (const auto& x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  order = outside;
  order.insert(order.end(), support.begin(), support.end());
  auto pivots = rref(k, m, a.cols, order);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (!in[pivots[i]]) continue;
    std::vector<Rational> v;
    for (int s : support) v.push_back(m[i][s]);
    out.push_back(std::move(v));
  }
  return out;
}

IntRow primitive(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  IntRow out;
  for (const auto& x : v) out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  BigInt g = content(out);
  if (g != 0)
    for (auto& x : out) x /= g;
  for (const auto& x : out)
    if (x != 0) {
      if (x < 0)
        for (auto& y : out) y = -y;
      break;
    }
  return out;
}

bool unit_entries(const IntRow& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x >= -1 && x <= 1; });
}

}  // namespace

IntegerMatrix IntegerMatrix::from_rows(IntRows rows, std::size_t cols) {
  IntegerMatrix m;
  m.rows = std::move(rows);
  m.cols = cols;
  for (const auto& r : m.rows)
    if (r.size() != cols) throw InputError("matrix rows have different lengths");
  return m;
}

BigInt hadamard_bound(const IntegerMatrix& a) {
  std::vector<BigInt> norms;
  for (const auto& r : a.rows) {
    BigInt s = 0;
    for (const auto& x : r) s += x * x;
    norms.push_back(std::max(BigInt(1), ceil_sqrt(s)));
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  BigInt out = 1;
  const std::size_t k = std::min(norms.size(), a.cols);
  for (std::size_t i = 0; i < k; ++i) out *= norms[i];
  return out;
}

bool spans_integer_lattice(const IntegerMatrix& a) {
  if (a.cols == 0) return true;
  auto h = hermite_rows(a.rows, a.cols);
  if (h.size() != a.cols) return false;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (h[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Matroid matroid_over_field(const IntegerMatrix& a, Field field) {
  return Matroid::from_rows(field, labels_or_default(a), a.rows);
}

std::optional<IntRow> circuit_support_vector(const IntegerMatrix& a, const std::vector<int>& support) {
  if (support.empty()) return std::nullopt;
  for (int s : support)
    if (s < 0 || static_cast<std::size_t>(s) >= a.cols) throw InputError("support column out of range");
  auto space = row_vectors_on(a, support);
  if (space.size() != 1) return std::nullopt;
  auto v = primitive(space.front());
  if (std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; }) || !unit_entries(v)) return std::nullopt;
  IntRow full(a.cols, 0);
  for (std::size_t i = 0; i < support.size(); ++i) full[support[i]] = v[i];
  if (!in_row_lattice(hermite_rows(a.rows, a.cols), full)) return std::nullopt;
  return full;
}

RegularityReport is_regular_representation(const IntegerMatrix& a, std::size_t bound) {
  RegularityReport r;
  const auto mq = matroid_over_field(a, Field::rationals());
  r.matroid = mq;
  const BigInt h = hadamard_bound(a);
  if (h > 10000000) throw SizeGuardError("Hadamard bound too large for a prime sweep");
  for (int p : primes_up_to(h.convert_to<long>())) {
    if (!matroid_equals(mq, matroid_over_field(a, Field::prime(p)))) {
      r.failure = "matroid over F" + std::to_string(p) + " differs from the matroid over Q";
      return r;
    }
  }
  IntRows vectors;
  for (const auto& c : mq.circuits(bound)) {
    auto v = circuit_support_vector(a, c);
    if (!v) {
      r.failure = "no {0,+-1} row-lattice vector on circuit {" + [&] {
        std::string s;
        for (int x : c) s += (s.empty() ? "" : ",") + mq.ground()[x];
        return s;
      }() + "}";
      return r;
    }
    vectors.push_back(std::move(*v));
  }
  const auto lattice = hermite_rows(vectors, a.cols);
  for (const auto& row : a.rows)
    if (!in_row_lattice(lattice, row)) {
      r.failure = "circuit vectors do not span the rows over the integers";
      return r;
    }
  r.regular = true;
  return r;
}

bool is_totally_unimodular(const IntegerMatrix& a, std::size_t max_minors) {
  const std::size_t m = a.rows.size(), n = a.cols;
  std::size_t checked = 0;
  std::vector<int> rows, cols;
  bool ok = true;
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t k) {
    if (!ok) return;
    if (rows.size() == k) {
      pick_cols(0, k);
      return;
    }
    for (std::size_t i = start; i < m && ok; ++i) {
      rows.push_back(static_cast<int>(i));
      pick_rows(i + 1, k);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start, std::size_t k) {
    if (!ok) return;
    if (cols.size() == k) {
      if (++checked > max_minors) throw SizeGuardError("total unimodularity check refused: too many minors");
      IntRows sub;
      for (int r : rows) {
        IntRow row;
        for (int c : cols) row.push_back(a.rows[r][c]);
        sub.push_back(std::move(row));
      }
      BigInt d = determinant(sub);
      if (d > 1 || d < -1) ok = false;
      return;
    }
    for (std::size_t j = start; j < n && ok; ++j) {
      cols.push_back(static_cast<int>(j));
      pick_cols(j + 1, k);
      cols.pop_back();
    }
  };
  for (std::size_t k = 1; k <= std::min(m, n) && ok; ++k) pick_rows(0, k);
  return ok;
}

std::vector<IntRow> cocircuit_vectors(const IntegerMatrix& a) {
  auto report = is_regular_representation(a);
  if (!report.regular) throw InputError("not a regular representation: " + report.failure);
  std::vector<IntRow> out;
  for (const auto& d : report.matroid->cocircuits()) {
    IntRows sub;
    for (const auto& r : a.rows) {
      IntRow row;
      for (int c : d) row.push_back(r[c]);
      sub.push_back(std::move(row));
    }
    auto ker = integer_kernel(sub, d.size());
    if (ker.size() != 1) throw std::logic_error("cocircuit without a one-dimensional orthogonal space");
    std::vector<Rational> q(ker.front().begin(), ker.front().end());
    auto v = primitive(q);
    if (!unit_entries(v) || std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; }))
      throw std::logic_error("cocircuit vector is not {0,+-1} with full support");
    IntRow full(a.cols, 0);
    for (std::size_t i = 0; i < d.size(); ++i) full[d[i]] = v[i];
    out.push_back(std::move(full));
  }
  // The vectors must generate the whole orthogonal lattice.
  const auto lattice = hermite_rows(out, a.cols);
  for (const auto& k : integer_kernel(a.rows, a.cols))
    if (!in_row_lattice(lattice, k)) throw std::logic_error("cocircuit vectors do not generate the orthogonal lattice");
  return out;
}

}  // namespace sc2
