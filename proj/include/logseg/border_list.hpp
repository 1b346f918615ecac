#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "logseg/core_model.hpp"

namespace logseg {

/// Max tracks the largest suffix mean, Min the smallest.
enum class Orientation { Max, Min };

/// True when `a` is at least as extreme as `b` (a >= b for Max, a <= b for Min).
/// This is the pop/reattach test; equality counts.
inline bool at_least_as_extreme(Orientation o, double a, double b) {
  return o == Orientation::Max ? a >= b : a <= b;
}

struct SuffixExtreme {
  Index start;
  double mean;
};

/// Sorted border list of a window [start, end] that grows on the right.
///
/// Each border is the start of the extreme-mean suffix for some extension of
/// the window; the last border starts the extreme suffix of the current window.
class BorderList {
 public:
  BorderList(const PrefixSums& ps, Index start, Orientation orientation);

  /// Extends the window by one point. `i` must equal end() + 1.
  void update(Index i);

  SuffixExtreme extreme_suffix() const;

  std::span<const Index> borders() const { return borders_; }
  Index start() const { return start_; }
  /// start() - 1 before the first update.
  Index end() const { return end_; }
  Orientation orientation() const { return orientation_; }
  std::size_t pops() const { return pops_; }

 private:
  const PrefixSums* ps_;
  Orientation orientation_;
  Index start_;
  Index end_;
  std::vector<Index> borders_;
  std::size_t pops_ = 0;
};

/// Every k in [b, e] for which no a, c with b <= a < k <= c <= e has
/// mean(a, k-1) at least as extreme as mean(k, c). Cubic; test oracle.
std::vector<Index> borders_bruteforce(const PrefixSums& ps, Index b, Index e,
                                      Orientation orientation);

}  // namespace logseg
