#include "sc2/cyclic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sc2 {

CyclicOrder::CyclicOrder(std::vector<int> elements) : elems_(std::move(elements)) {
  std::set<int> seen(elems_.begin(), elems_.end());
  if (seen.size() != elems_.size()) throw std::invalid_argument("cyclic order elements must be distinct");
}

int CyclicOrder::position(int x) const {
  auto it = std::find(elems_.begin(), elems_.end(), x);
  return it == elems_.end() ? -1 : static_cast<int>(it - elems_.begin());
}

int CyclicOrder::at(long i) const {
  const long n = static_cast<long>(elems_.size());
  return elems_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::vector<int> CyclicOrder::canonical() const {
  std::vector<int> best = elems_;
  for (std::size_t r = 1; r < elems_.size(); ++r) {
    std::vector<int> rot(elems_.begin() + static_cast<long>(r), elems_.end());
    rot.insert(rot.end(), elems_.begin(), elems_.begin() + static_cast<long>(r));
    best = std::min(best, rot);
  }
  return best;
}

std::vector<int> CyclicOrder::open_closed(int from, int to) const {
  int i = position(from), j = position(to);
  if (i < 0 || j < 0) throw std::invalid_argument("element not in cyclic order");
  std::vector<int> out;
  for (long k = i + 1;; ++k) {
    out.push_back(at(k));
    if (at(k) == to) break;
  }
  return out;
}

namespace {

std::map<int, int> class_map(const CyclicOrder& o, const Partition& p) {
  std::map<int, int> cls;
  std::size_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int x : p[i]) {
      if (!o.contains(x) || !cls.emplace(x, static_cast<int>(i)).second)
        throw std::invalid_argument("partition does not match the cyclic order");
      ++total;
    }
  if (total != o.size()) throw std::invalid_argument("partition does not cover the cyclic order");
  return cls;
}

bool arc_hits(const CyclicOrder& o, int from, int to, const std::set<int>& x) {
  // Elements strictly between `from` and `to`, going forward.
  for (long k = o.position(from) + 1;; ++k) {
    int e = o.at(k);
    if (e == to) return false;
    if (x.count(e)) return true;
  }
}

}  // namespace

bool separates(const CyclicOrder& o, int y1, int y2, const std::vector<int>& x) {
  if (y1 == y2 || !o.contains(y1) || !o.contains(y2)) throw std::invalid_argument("separates: bad elements");
  std::set<int> xs(x.begin(), x.end());
  if (xs.count(y1) || xs.count(y2)) return false;
  return arc_hits(o, y1, y2, xs) && arc_hits(o, y2, y1, xs);
}

bool interval_hypothesis(const CyclicOrder& o, const Partition& p) {
  class_map(o, p);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t a = 0; a < p[i].size(); ++a)
      for (std::size_t b = a + 1; b < p[i].size(); ++b)
        for (std::size_t j = 0; j < p.size(); ++j)
          if (j != i && separates(o, p[i][a], p[i][b], p[j])) return false;
  return true;
}

IntervalResult interval_class(const CyclicOrder& o, const Partition& p) {
  IntervalResult r;
  r.hypothesis_holds = interval_hypothesis(o, p);
  auto cls = class_map(o, p);
  if (p.size() == 1) {
    r.interval_class = p[0];
    return r;
  }
  const int a = o.at(0);
  const int ca = cls[a];
  int best = -1, best_first = 0, best_len = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (static_cast<int>(i) == ca || p[i].empty()) continue;
    int first = static_cast<int>(o.size()), last = -1;
    for (int x : p[i]) {
      first = std::min(first, o.position(x));
      last = std::max(last, o.position(x));
    }
    int len = last - first;
    if (best < 0 || len < best_len || (len == best_len && first < best_first)) {
      best = static_cast<int>(i);
      best_first = first;
      best_len = len;
    }
  }
  if (best >= 0 && static_cast<int>(p[best].size()) == best_len + 1) {
    std::vector<int> out;
    for (int k = best_first; k <= best_first + best_len; ++k) out.push_back(o.at(k));
    r.interval_class = out;
  }
  return r;
}

bool is_cyclic_suborder(const CyclicOrder& o, int x1, int x2, int x3, int x4) {
  int p[4] = {o.position(x1), o.position(x2), o.position(x3), o.position(x4)};
  for (int v : p)
    if (v < 0) return false;
  const int n = static_cast<int>(o.size());
  int off[4];
  for (int i = 0; i < 4; ++i) off[i] = ((p[i] - p[0]) % n + n) % n;
  return off[0] < off[1] && off[1] < off[2] && off[2] < off[3];
}

CyclicOrder exchange(const CyclicOrder& o, int x1, int x2, int x3, int x4) {
  if (!is_cyclic_suborder(o, x1, x2, x3, x4)) throw std::invalid_argument("exchange: not a cyclic suborder");
  auto segment = [&](int from, int to) {
    auto s = o.open_closed(from, to);
    s.pop_back();
    return s;
  };
  auto s1 = segment(x1, x2), s2 = segment(x2, x3), s3 = segment(x3, x4), s4 = segment(x4, x1);
  std::vector<int> out{x3};
  out.insert(out.end(), s3.begin(), s3.end());
  out.push_back(x4);
  out.push_back(x2);
  out.insert(out.end(), s2.begin(), s2.end());
  out.insert(out.end(), s1.begin(), s1.end());
  out.insert(out.end(), s4.begin(), s4.end());
  out.push_back(x1);
  return CyclicOrder(out);
}

int fluctuation(const CyclicOrder& o, const Partition& p) {
  auto cls = class_map(o, p);
  int count = 0;
  const long n = static_cast<long>(o.size());
  if (n < 2) return 0;
  for (long i = 0; i < n; ++i)
    if (cls[o.at(i)] != cls[o.at(i + 1)]) ++count;
  return count;
}

bool is_improving(const CyclicOrder& o, int x1, int x2, int x3, int x4, const Partition& p) {
  auto cls = class_map(o, p);
  auto next = [&](int x) { return o.at(o.position(x) + 1); };
  auto prev = [&](int x) { return o.at(o.position(x) - 1); };
  if (cls[x2] != cls[x4]) return false;
  return cls[x4] != cls[next(x4)] && cls[x2] != cls[prev(x2)] && cls[x1] != cls[next(x1)] &&
         cls[x3] != cls[prev(x3)];
}

namespace {

void for_each_rgs(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w(n, 0);
  std::function<void(int, int)> rec = [&](int i, int max) {
    if (i == n) {
      f(w);
      return;
    }
    for (int c = 0; c <= max + 1; ++c) {
      w[i] = c;
      rec(i + 1, std::max(max, c));
    }
  };
  if (n == 0) return;
  w[0] = 0;
  rec(1, 0);
}

Partition partition_from_labels(const std::vector<int>& elements, const std::vector<int>& label) {
  int k = *std::max_element(label.begin(), label.end()) + 1;
  Partition p(k);
  for (std::size_t i = 0; i < elements.size(); ++i) p[label[i]].push_back(elements[i]);
  return p;
}

bool interval_case_ok(const CyclicOrder& o, const Partition& p) {
  auto r = interval_class(o, p);
  if (!r.hypothesis_holds) return true;
  if (!r.interval_class) return false;
  // The returned class must really be contiguous and one of the classes.
  auto sorted = *r.interval_class;
  std::sort(sorted.begin(), sorted.end());
  for (auto c : p) {
    std::sort(c.begin(), c.end());
    if (c == sorted) return true;
  }
  return false;
}

void improving_cases(const CyclicOrder& o, const Partition& p, LemmaCheck& check) {
  const int n = static_cast<int>(o.size());
  const int base = fluctuation(o, p);
  for (int a = 0; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int x1 = o.at(a), x2 = o.at(a + b), x3 = o.at(a + c), x4 = o.at(a + d);
          if (!is_improving(o, x1, x2, x3, x4, p)) continue;
          ++check.cases;
          if (fluctuation(exchange(o, x1, x2, x3, x4), p) >= base) ++check.failures;
        }
}

}  // namespace

LemmaCheck verify_interval_lemma(int n) {
  LemmaCheck check;
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  CyclicOrder o(elems);
  for_each_rgs(n, [&](const std::vector<int>& w) {
    ++check.cases;
    if (!interval_case_ok(o, partition_from_labels(elems, w))) ++check.failures;
  });
  return check;
}

LemmaCheck verify_improving_lemma(int n) {
  LemmaCheck check;
  if (n < 4) return check;
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  CyclicOrder o(elems);
  for_each_rgs(n, [&](const std::vector<int>& w) { improving_cases(o, partition_from_labels(elems, w), check); });
  return check;
}

namespace {

void for_each_order_and_partition(int n, const std::function<void(const CyclicOrder&, const Partition&)>& f) {
  std::vector<int> rest(n > 0 ? n - 1 : 0);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  do {
    std::vector<int> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    CyclicOrder o(order);
    for_each_rgs(n, [&](const std::vector<int>& w) { f(o, partition_from_labels(elems, w)); });
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

LemmaCheck verify_interval_lemma_literal(int n) {
  LemmaCheck check;
  for_each_order_and_partition(n, [&](const CyclicOrder& o, const Partition& p) {
    ++check.cases;
    if (!interval_case_ok(o, p)) ++check.failures;
  });
  return check;
}

LemmaCheck verify_improving_lemma_literal(int n) {
  LemmaCheck check;
  if (n < 4) return check;
  for_each_order_and_partition(n, [&](const CyclicOrder& o, const Partition& p) { improving_cases(o, p, check); });
  return check;
}

}  // namespace sc2
