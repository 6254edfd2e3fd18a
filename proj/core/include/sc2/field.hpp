#pragma once

// Exact field arithmetic and row reduction shared by the matroid engine.
//
// Two fields are supported: the prime fields F_p (small p, int arithmetic)
// and the rationals (arbitrary precision). Every routine is a template over
// a field-ops type so the same elimination code serves both.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc2 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A field tag: p > 1 prime means F_p, p == 0 means the rationals.
struct Field {
  int p = 3;

  bool rational() const { return p == 0; }
  std::string name() const { return rational() ? "Q" : "F" + std::to_string(p); }
  friend bool operator==(const Field&, const Field&) = default;

  static Field rationals() { return Field{0}; }
  static Field prime(int p) { return Field{p}; }
};

struct PrimeOps {
  int p;
  using T = std::int32_t;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return static_cast<T>((a + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((a - b + p) % p); }
  T mul(T a, T b) const { return static_cast<T>((static_cast<std::int64_t>(a) * b) % p); }
  T neg(T a) const { return a == 0 ? 0 : static_cast<T>(p - a); }
  T inv(T a) const {
    // Fermat; p is small.
    std::int64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
      if (e & 1) r = (r * b) % p;
      b = (b * b) % p;
      e >>= 1;
    }
    return static_cast<T>(r);
  }
  T from_int(const BigInt& v) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<T>(r.convert_to<long>());
  }
  T from_long(long v) const {
    long r = v % p;
    if (r < 0) r += p;
    return static_cast<T>(r);
  }
  /// Symmetric lift into (-p/2, p/2].
  long lift(T a) const { return a > p / 2 ? static_cast<long>(a) - p : a; }
};

struct RationalOps {
  using T = Rational;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  T from_int(const BigInt& v) const { return T(v); }
  T from_long(long v) const { return T(v); }
};

template <class K>
using Rows = std::vector<std::vector<typename K::T>>;

/// In-place reduced row echelon form. Pivots are searched over columns in
/// `order` (all columns, ascending, when empty); `order` must be a
/// permutation of all columns. Zero rows are dropped.
/// Returns the pivot column of each remaining row.
template <class K>
std::vector<int> rref(const K& k, Rows<K>& m, std::size_t cols, const std::vector<int>& order = {}) {
  std::vector<int> col_order = order;
  if (col_order.empty()) {
    col_order.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) col_order[j] = static_cast<int>(j);
  }
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c : col_order) {
    if (r >= m.size()) break;
    std::size_t sel = r;
    while (sel < m.size() && k.is_zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    auto piv_inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, piv_inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || k.is_zero(m[i][c])) continue;
      auto f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!k.is_zero(m[r][j])) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Rank of the submatrix formed by the given columns.
template <class K>
int column_rank(const K& k, const Rows<K>& m, const std::vector<int>& cols) {
  Rows<K> sub(m.size(), std::vector<typename K::T>(cols.size(), k.zero()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[i][cols[j]];
  return static_cast<int>(rref(k, sub, cols.size()).size());
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <class K>
Rows<K> kernel_basis(const K& k, Rows<K> m, std::size_t cols) {
  auto pivots = rref(k, m, cols);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
  Rows<K> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<typename K::T> v(cols, k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Contract the column set `contract` of the column matroid: project the
/// row space along the span of those columns and drop them.
template <class K>
Rows<K> contract_columns(const K& k, Rows<K> m, std::size_t cols, const std::vector<int>& contract,
                         const std::vector<int>& keep) {
  std::vector<bool> on_contract(cols, false);
  for (int c : contract) on_contract[c] = true;
  std::vector<int> order = contract;
  for (std::size_t c = 0; c < cols; ++c)
    if (!on_contract[c]) order.push_back(static_cast<int>(c));
  auto pivots = rref(k, m, cols, order);
  Rows<K> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (on_contract[pivots[i]]) continue;
    std::vector<typename K::T> row;
    row.reserve(keep.size());
    for (int c : keep) row.push_back(m[i][c]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace sc2
