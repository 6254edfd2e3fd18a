#pragma once

// Cyclic orders of distinct elements: separation, interval classes,
// exchanges and fluctuation.

#include <optional>
#include <vector>

namespace sc2 {

class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(std::vector<int> elements);

  const std::vector<int>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  int position(int x) const;
  int at(long i) const;  // cyclic indexing
  bool contains(int x) const { return position(x) >= 0; }

  /// Rotation starting at the smallest element's lexicographically least
  /// rotation; equal cyclic orders have equal canonical forms.
  std::vector<int> canonical() const;
  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) { return a.canonical() == b.canonical(); }

  /// Elements strictly after `from` up to and including `to`, going forward.
  std::vector<int> open_closed(int from, int to) const;

 private:
  std::vector<int> elems_;
};

using Partition = std::vector<std::vector<int>>;

bool separates(const CyclicOrder& o, int y1, int y2, const std::vector<int>& x);

/// "No two elements of the same class separate some other class."
bool interval_hypothesis(const CyclicOrder& o, const Partition& p);

struct IntervalResult {
  std::optional<std::vector<int>> interval_class;
  bool hypothesis_holds = false;
};

/// The class with inclusion-minimal closure, if it is a subinterval.
IntervalResult interval_class(const CyclicOrder& o, const Partition& p);

bool is_cyclic_suborder(const CyclicOrder& o, int x1, int x2, int x3, int x4);

/// x3 S3 x4 x2 S2 S1 S4 x1, where S_i is the segment following x_i.
CyclicOrder exchange(const CyclicOrder& o, int x1, int x2, int x3, int x4);

int fluctuation(const CyclicOrder& o, const Partition& p);
bool is_improving(const CyclicOrder& o, int x1, int x2, int x3, int x4, const Partition& p);

struct LemmaCheck {
  long cases = 0;
  long failures = 0;
};

/// Exhaustive checks over every cyclic order of size n and every partition.
/// Both lemmas only depend on the sequence of class labels read around the
/// order, so the search runs over restricted-growth label strings, which
/// covers every (order, partition) pair up to renaming elements.
LemmaCheck verify_interval_lemma(int n);
LemmaCheck verify_improving_lemma(int n);
/// Literal enumeration of all orders and partitions, for cross-checking
/// the reduction at small n.
LemmaCheck verify_interval_lemma_literal(int n);
LemmaCheck verify_improving_lemma_literal(int n);

}  // namespace sc2
