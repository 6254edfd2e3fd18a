#pragma once

// Brute-force reference implementations. They deliberately avoid the
// library's elimination routines so that agreement means something.

#include "sc2/complex.hpp"
#include "sc2/graph.hpp"
#include "sc2/intlinalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using sc2::BigInt;
using sc2::IntRows;

using Support = std::vector<int>;

inline std::set<Support> minimal(const std::set<Support>& supports) {
  std::set<Support> out;
  for (const auto& s : supports) {
    bool min = true;
    for (const auto& t : supports)
      if (t != s && t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        min = false;
        break;
      }
    if (min) out.insert(s);
  }
  return out;
}

/// Circuits as minimal supports of the row space over F_p, by listing every
/// combination of the rows. Exponential in the number of rows.
inline std::set<Support> row_space_circuits(const IntRows& a, std::size_t cols, int p) {
  std::set<Support> supports;
  const std::size_t r = a.size();
  std::vector<int> coef(r, 0);
  while (true) {
    std::size_t i = 0;
    while (i < r && coef[i] == p - 1) coef[i++] = 0;
    if (i == r) break;
    ++coef[i];
    Support s;
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt x = 0;
      for (std::size_t k = 0; k < r; ++k) x += coef[k] * a[k][j];
      x %= p;
      if (x != 0) s.push_back(static_cast<int>(j));
    }
    if (!s.empty()) supports.insert(s);
  }
  return minimal(supports);
}

/// Edge sets of cycles: nonempty, connected, every vertex of even degree 2.
inline std::set<Support> graph_cycles(const sc2::Multigraph& g) {
  std::set<Support> out;
  const std::size_t m = g.edges.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.n, 0);
    Support s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        s.push_back(static_cast<int>(i));
        ++deg[g.edges[i].first];
        ++deg[g.edges[i].second];
      }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
    if (!sc2::edge_set_connected(g, s)) continue;
    out.insert(s);
  }
  return out;
}

/// Leibniz expansion.
inline BigInt leibniz(const IntRows& m) {
  const std::size_t n = m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? BigInt(1) : det;
}

/// Every square submatrix has determinant in {-1, 0, 1}.
inline bool totally_unimodular(const IntRows& a, std::size_t cols) {
  const std::size_t r = a.size();
  for (std::uint32_t rm = 1; rm < (1u << r); ++rm)
    for (std::uint32_t cm = 1; cm < (1u << cols); ++cm) {
      if (__builtin_popcount(rm) != __builtin_popcount(cm)) continue;
      IntRows sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rm >> i & 1)) continue;
        sc2::IntRow row;
        for (std::size_t j = 0; j < cols; ++j)
          if (cm >> j & 1) row.push_back(a[i][j]);
        sub.push_back(row);
      }
      BigInt d = leibniz(sub);
      if (d > 1 || d < -1) return false;
    }
  return true;
}

/// Rank over F_p of a matrix with small entries, by plain elimination on
/// machine integers.
inline int rank_mod(const IntRows& a, std::size_t cols, int p) {
  std::vector<std::vector<long>> m;
  for (const auto& row : a) {
    std::vector<long> r;
    for (const auto& x : row) r.push_back(static_cast<long>(((x % p) + p) % p));
    m.push_back(r);
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long inv = 1;
    while (m[rank][c] * inv % p != 1) ++inv;
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (static_cast<int>(i) != rank && m[i][c] != 0) {
        long f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

/// Euler characteristic of the complex as a cell complex.
inline long euler_characteristic(const sc2::Complex2& c) {
  return static_cast<long>(c.num_vertices()) - static_cast<long>(c.num_edges()) + static_cast<long>(c.num_faces());
}

}  // namespace oracle
