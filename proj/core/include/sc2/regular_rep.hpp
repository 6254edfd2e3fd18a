#pragma once

// Integer matrices as representations of matroids over every field.
//
// Prime sweeps stop at the Hadamard bound H of the maximal minors: ranks
// over F_p can only drop below the rational rank when p divides every
// maximal nonzero minor, and a nonzero minor has absolute value at most H.

#include "sc2/matroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sc2 {

struct IntegerMatrix {
  IntRows rows;
  std::size_t cols = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  static IntegerMatrix from_rows(IntRows rows, std::size_t cols);
};

/// Product of the k largest rounded-up row norms, k = min(#rows, #cols).
BigInt hadamard_bound(const IntegerMatrix& a);

/// The integer row span is all of Z^cols.
bool spans_integer_lattice(const IntegerMatrix& a);

Matroid matroid_over_field(const IntegerMatrix& a, Field field);

/// A {0,+-1} vector with exactly this support in the integer row span,
/// first nonzero entry +1.
std::optional<IntRow> circuit_support_vector(const IntegerMatrix& a, const std::vector<int>& support);

struct RegularityReport {
  bool regular = false;
  std::optional<Matroid> matroid;
  std::string failure;
};

RegularityReport is_regular_representation(const IntegerMatrix& a, std::size_t bound = kDefaultCircuitBound);

bool is_totally_unimodular(const IntegerMatrix& a, std::size_t max_minors = 2000000);

/// One {0,+-1} vector per cocircuit, orthogonal to every row. Throws
/// InputError if a is not a regular representation.
std::vector<IntRow> cocircuit_vectors(const IntegerMatrix& a);

}  // namespace sc2
