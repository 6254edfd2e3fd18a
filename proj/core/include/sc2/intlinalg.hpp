#pragma once

// Integer (lattice) linear algebra on arbitrary-precision entries.

#include "sc2/field.hpp"

#include <vector>

namespace sc2 {

using IntRow = std::vector<BigInt>;
using IntRows = std::vector<IntRow>;

struct ExtendedGcd {
  BigInt gcd;    // non-negative
  BigInt alpha;  // alpha * m - beta * n == gcd
  BigInt beta;
};

/// Extended Euclid in the form alpha*m - beta*n = gcd(m, n).
ExtendedGcd extended_gcd(const BigInt& m, const BigInt& n);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
BigInt determinant(const IntRows& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
/// The number of returned factors is the rank over Q.
std::vector<BigInt> smith_invariants(IntRows m);

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// `transform` (if non-null) receives a unimodular U with U * m == H
/// (H includes the trailing zero rows, which are dropped from the result).
IntRows hermite_rows(const IntRows& m, std::size_t cols, IntRows* transform = nullptr);

/// Basis of the integer lattice {x in Z^cols : m x = 0}.
IntRows integer_kernel(const IntRows& m, std::size_t cols);

/// True when v lies in the integer row span of the lattice basis `hnf`
/// (as returned by hermite_rows).
bool in_row_lattice(const IntRows& hnf, const IntRow& v);

/// Rank over Q.
int rational_rank(const IntRows& m, std::size_t cols);

/// Rank over F_p.
int rank_mod_p(const IntRows& m, std::size_t cols, int p);

/// Primes up to and including `bound` (sieve).
std::vector<int> primes_up_to(long bound);

}  // namespace sc2
