#include "logseg/border_list.hpp"

#include <cassert>

namespace logseg {

BorderList::BorderList(const PrefixSums& ps, Index start, Orientation orientation)
    : ps_(&ps), orientation_(orientation), start_(start), end_(start - 1) {
  assert(start >= 1 && start <= ps.size());
}

void BorderList::update(Index i) {
  assert(i == end_ + 1 && i <= ps_->size());
  end_ = i;
  borders_.push_back(i);
  while (borders_.size() > 1) {
    const Index last = borders_.back();
    const Index prev = borders_[borders_.size() - 2];
    if (!at_least_as_extreme(orientation_, ps_->mean(prev, i), ps_->mean(last, i))) break;
    borders_.pop_back();
    ++pops_;
  }
}

SuffixExtreme BorderList::extreme_suffix() const {
  assert(!borders_.empty());
  const Index j = borders_.back();
  return {j, ps_->mean(j, end_)};
}

std::vector<Index> borders_bruteforce(const PrefixSums& ps, Index b, Index e,
                                      Orientation orientation) {
  std::vector<Index> out;
  for (Index k = b; k <= e; ++k) {
    bool border = true;
    for (Index a = b; a < k && border; ++a) {
      const double left = ps.mean(a, k - 1);
      for (Index c = k; c <= e; ++c) {
        if (at_least_as_extreme(orientation, left, ps.mean(k, c))) {
          border = false;
          break;
        }
      }
    }
    if (border) out.push_back(k);
  }
  return out;
}

}  // namespace logseg
