#pragma once

// Represented matroids in the row-support convention: the circuits of the
// matroid of a matrix A are the minimal nonempty supports of vectors in the
// row space of A. That makes it the dual of the usual column matroid of A,
// and all rank computations below go through that duality:
//
//   r_M(S) = |S| - r_N(E) + r_N(E \ S),     N = column matroid of A.
//
// The representation is stored as A in reduced row echelon form over the
// chosen field.

#include "sc2/complex.hpp"
#include "sc2/field.hpp"
#include "sc2/graph.hpp"

#include <string>
#include <variant>
#include <vector>

namespace sc2 {

/// Ground sets above this size are refused by the exhaustive routines.
inline constexpr std::size_t kDefaultCircuitBound = 20;
inline constexpr std::size_t kDefaultScanBound = 12;

struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Matroid {
 public:
  using PrimeRows = Rows<PrimeOps>;
  using RatRows = Rows<RationalOps>;

  Matroid() = default;

  /// Matroid whose circuits are the minimal supports of the row space.
  static Matroid from_rows(Field field, std::vector<std::string> ground, const IntRows& a);
  /// The ordinary column matroid of `a` (dependent sets = dependent columns).
  static Matroid column_matroid(Field field, std::vector<std::string> ground, const IntRows& a);
  template <class K>
  static Matroid from_field_rows(Field field, std::vector<std::string> ground, Rows<K> rows);

  const std::vector<std::string>& ground() const { return ground_; }
  Field field() const { return field_; }
  std::size_t size() const { return ground_.size(); }
  int index(const std::string& id) const;
  std::vector<int> indices(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids(const std::vector<int>& idx) const;

  /// Rank of the whole matroid.
  int rank() const { return static_cast<int>(size()) - representation_rank(); }
  int rank(const std::vector<int>& s) const;
  /// Rank of the submatrix of the representation on these columns.
  int column_rank(const std::vector<int>& s) const;
  /// Rank of the representation (the column rank of the full matrix).
  int representation_rank() const { return static_cast<int>(pivots_.size()); }

  bool is_loop(int e) const { return rank({e}) == 0; }
  bool is_coloop(int e) const;

  Matroid dual() const;
  /// Delete `del`, contract `con` (disjoint index sets).
  Matroid minor(const std::vector<int>& del, const std::vector<int>& con) const;
  Matroid minor_ids(const std::vector<std::string>& del, const std::vector<std::string>& con) const;
  Matroid restrict_to(const std::vector<int>& keep) const;
  Matroid relabel(std::vector<std::string> ground) const;

  /// All circuits as sorted index lists, sorted canonically.
  std::vector<std::vector<int>> circuits(std::size_t bound = kDefaultCircuitBound) const;
  std::vector<std::vector<int>> cocircuits(std::size_t bound = kDefaultCircuitBound) const;

  /// Connected components (sorted index lists).
  std::vector<std::vector<int>> components() const;

  /// Pivot columns of the stored row echelon form (a basis of the column
  /// matroid, so its complement is a basis of this matroid).
  const std::vector<int>& pivots() const { return pivots_; }
  /// Nonzero pattern of the stored row echelon form.
  std::vector<std::vector<bool>> support_pattern() const;
  /// Entries as strings (symmetric lift for prime fields).
  std::vector<std::vector<std::string>> matrix_strings() const;

  const PrimeRows& prime_rows() const { return std::get<PrimeRows>(rows_); }
  const RatRows& rational_rows() const { return std::get<RatRows>(rows_); }

  template <class F>
  decltype(auto) visit(F&& f) const {
    if (field_.rational()) return f(RationalOps{}, std::get<RatRows>(rows_));
    return f(PrimeOps{field_.p}, std::get<PrimeRows>(rows_));
  }

 private:
  Field field_;
  std::vector<std::string> ground_;
  std::variant<PrimeRows, RatRows> rows_;
  std::vector<int> pivots_;
};

template <class K>
Matroid Matroid::from_field_rows(Field field, std::vector<std::string> ground, Rows<K> rows) {
  Matroid m;
  m.field_ = field;
  m.ground_ = std::move(ground);
  K k = [&] {
    if constexpr (std::is_same_v<K, PrimeOps>)
      return PrimeOps{field.p};
    else
      return RationalOps{};
  }();
  m.pivots_ = rref(k, rows, m.ground_.size());
  m.rows_ = std::move(rows);
  return m;
}

/// Thrown when two matroids are compared on different ground sets.
struct GroundMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Equality of matroids on the same ground set (ids may be in any order).
/// Over F_2 and F_3 this uses uniqueness of representations up to row
/// operations and column scaling; otherwise circuit sets are compared.
bool matroid_equals(const Matroid& a, const Matroid& b);

/// Exhaustive comparison of rank functions (desk-scale oracle).
bool matroid_equals_bruteforce(const Matroid& a, const Matroid& b, std::size_t bound = kDefaultCircuitBound);

/// Dual matroid of a complex: the incidence matrix over F_3 (or another field).
Matroid dual_matroid(const Complex2& c, Field field = Field::prime(3));
/// Dual matroid of the link graph at a vertex, on the faces through v.
/// Link columns for the same face are summed.
Matroid link_dual_matroid(const Complex2& c, int v, Field field = Field::prime(3));

/// Cycle matroid of a multigraph, ground = edge labels.
Matroid cycle_matroid(const Multigraph& g, Field field = Field::prime(3));

struct ConnectivityReport {
  bool connected = false;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> two_separations;
  bool globally_3connected = false;
};

/// Exhaustive bipartition scan. Both the column-rank and matroid-rank forms
/// of the separation inequality are evaluated and must agree.
ConnectivityReport connectivity(const Matroid& m, std::size_t bound = 16);

struct LocalityReport {
  bool local = true;
  std::vector<std::string> failing_vertices;
};

LocalityReport is_local(const Complex2& c);

}  // namespace sc2
