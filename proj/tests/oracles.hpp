// Independent reference computations shared by the test suites.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "logseg/border_list.hpp"
#include "logseg/border_tree.hpp"
#include "logseg/core_model.hpp"

namespace oracle {

using logseg::Index;

inline double direct_sum(const std::vector<double>& v, Index b, Index e) {
  double s = 0.0;
  for (Index k = b; k <= e; ++k) s += v[k - 1];
  return s;
}

/// Sum of squared deviations from each segment mean, breakpoints = segment ends.
inline double l2_error(const std::vector<double>& v, const std::vector<Index>& breakpoints) {
  double err = 0.0;
  Index b = 1;
  auto seg = [&](Index e) {
    const double m = direct_sum(v, b, e) / static_cast<double>(e - b + 1);
    for (Index k = b; k <= e; ++k) err += (v[k - 1] - m) * (v[k - 1] - m);
    b = e + 1;
  };
  for (Index e : breakpoints) seg(e);
  seg(v.size());
  return err;
}

/// Golden-section maximisation of a unimodal function on [lo, hi].
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         int iterations = 200) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  for (int it = 0; it < iterations; ++it) {
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return f((a + b) / 2.0);
}

/// Brute-force extreme suffix mean over every start in [b, e].
inline logseg::SuffixExtreme extreme_suffix(const logseg::PrefixSums& ps, Index b, Index e,
                                            logseg::Orientation o) {
  logseg::SuffixExtreme best{e, ps.mean(e, e)};
  for (Index k = e; k-- > b;) {
    const double m = ps.mean(k, e);
    if (o == logseg::Orientation::Max ? m > best.mean : m < best.mean) best = {k, m};
  }
  return best;
}

/// Parent map of the border tree rebuilt from brute-force border lists.
/// Returns false in `consistent` if two lists disagree on a node's parent.
struct TreeShape {
  std::map<Index, Index> parent;  // 0 = root
  bool consistent = true;
};

inline TreeShape rebuild_tree(const logseg::PrefixSums& ps, const std::vector<Index>& candidates,
                              Index end, logseg::Orientation o) {
  TreeShape shape;
  for (Index c : candidates) {
    const auto borders = logseg::borders_bruteforce(ps, c, end, o);
    for (std::size_t k = 0; k < borders.size(); ++k) {
      const Index up = k + 1 < borders.size() ? borders[k + 1] : 0;
      auto [it, fresh] = shape.parent.emplace(borders[k], up);
      if (!fresh && it->second != up) shape.consistent = false;
    }
  }
  return shape;
}

inline TreeShape shape_of(const logseg::BorderTree& tree) {
  TreeShape shape;
  std::vector<Index> stack{logseg::BorderTree::kRoot};
  while (!stack.empty()) {
    const Index p = stack.back();
    stack.pop_back();
    for (Index c : tree.children(p)) {
      shape.parent[c] = p;
      stack.push_back(c);
    }
  }
  return shape;
}

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, bool discrete,
                                         int max_value = 4) {
  std::vector<double> v(n);
  std::uniform_int_distribution<int> di(0, max_value);
  std::uniform_real_distribution<double> dr(-3.0, 3.0);
  for (auto& x : v) x = discrete ? di(rng) : dr(rng);
  return v;
}

}  // namespace oracle
