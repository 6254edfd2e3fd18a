#include "sc2/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc2 {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// x*a + y*b == g
void bezout(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

ExtendedGcd extended_gcd(const BigInt& m, const BigInt& n) {
  BigInt g, x, y;
  bezout(m, n, g, x, y);
  return {g, x, BigInt(-y)};
}

BigInt determinant(const IntRows& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntRows a = input;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> smith_invariants(IntRows m) {
  std::vector<BigInt> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (!found || abs_big(m[i][j]) < best)) {
          found = true;
          best = abs_big(m[i][j]);
          pi = i;
          pj = j;
        }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility condition: the pivot must divide the whole block.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
              clean = false;
              break;
            }
      }
    }
    out.push_back(abs_big(m[t][t]));
    ++t;
  }
  return out;
}

IntRows hermite_rows(const IntRows& input, std::size_t cols, IntRows* transform) {
  IntRows h = input;
  const std::size_t n = h.size();
  IntRows u;
  if (transform) {
    u.assign(n, IntRow(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  }
  auto combine = [&](IntRows& mat, std::size_t r, std::size_t i, const BigInt& x, const BigInt& y,
                     const BigInt& p, const BigInt& q) {
    // row_r <- x row_r + y row_i ; row_i <- p row_r + q row_i
    for (std::size_t j = 0; j < mat[r].size(); ++j) {
      BigInt a = mat[r][j], b = mat[i][j];
      mat[r][j] = x * a + y * b;
      mat[i][j] = p * a + q * b;
    }
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    for (std::size_t i = r + 1; i < n; ++i) {
      if (h[i][c] == 0) continue;
      if (h[r][c] == 0) {
        std::swap(h[r], h[i]);
        if (transform) std::swap(u[r], u[i]);
        continue;
      }
      BigInt g, x, y;
      bezout(h[r][c], h[i][c], g, x, y);
      BigInt p = h[i][c] / g, q = -(h[r][c] / g);
      combine(h, r, i, x, y, p, q);
      if (transform) combine(u, r, i, x, y, p, q);
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& v : h[r]) v = -v;
      if (transform)
        for (auto& v : u[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(h[i][c], h[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
      if (transform)
        for (std::size_t j = 0; j < n; ++j) u[i][j] -= q * u[r][j];
    }
    ++r;
  }
  if (transform) *transform = std::move(u);
  h.resize(r);
  return h;
}

IntRows integer_kernel(const IntRows& m, std::size_t cols) {
  IntRows t(cols, IntRow(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  IntRows u;
  auto h = hermite_rows(t, m.size(), &u);
  IntRows kernel(u.begin() + static_cast<std::ptrdiff_t>(h.size()), u.end());
  return kernel;
}

bool in_row_lattice(const IntRows& hnf, const IntRow& v) {
  IntRow w = v;
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    if (w[c] % row[c] != 0) return false;
    BigInt q = w[c] / row[c];
    if (q != 0)
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * row[j];
  }
  return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; });
}

int rational_rank(const IntRows& m, std::size_t cols) {
  RationalOps k;
  Rows<RationalOps> a;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& x : row) r.emplace_back(x);
    a.push_back(std::move(r));
  }
  return static_cast<int>(rref(k, a, cols).size());
}

int rank_mod_p(const IntRows& m, std::size_t cols, int p) {
  PrimeOps k{p};
  Rows<PrimeOps> a;
  for (const auto& row : m) {
    std::vector<PrimeOps::T> r;
    for (const auto& x : row) r.push_back(k.from_int(x));
    a.push_back(std::move(r));
  }
  return static_cast<int>(rref(k, a, cols).size());
}

std::vector<int> primes_up_to(long bound) {
  std::vector<int> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<int>(i));
    for (long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace sc2
