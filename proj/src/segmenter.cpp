#include "logseg/segmenter.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

#include "logseg/border_list.hpp"
#include "logseg/border_tree.hpp"
#include "logseg/kernels.hpp"

namespace logseg {

namespace {

LevelTable empty_table(std::size_t level, std::size_t length) {
  LevelTable t;
  t.level = level;
  t.score.assign(length + 1, -std::numeric_limits<double>::infinity());
  t.right.assign(length + 1, Interval{0.0, 0.0});
  t.start.assign(length + 1, 0);
  return t;
}

void check_segments(std::size_t length, std::size_t segments) {
  if (segments == 0) throw InfeasibleError("number of segments must be at least 1");
  if (segments > length) {
    std::ostringstream os;
    os << "cannot split " << length << " points into " << segments << " segments";
    throw InfeasibleError(os.str());
  }
}

std::vector<Index> backtrack(const std::vector<LevelTable>& tables, std::size_t length) {
  std::vector<Index> breakpoints;
  Index i = length;
  for (std::size_t k = tables.size(); k >= 2; --k) {
    const Index c = tables[k - 1].start[i];
    breakpoints.push_back(c - 1);
    i = c - 1;
  }
  std::reverse(breakpoints.begin(), breakpoints.end());
  return breakpoints;
}

}  // namespace

double Counters::performance_ratio() const {
  if (baseline_comparisons == 0) return 1.0;
  return static_cast<double>(comparisons) / static_cast<double>(baseline_comparisons);
}

std::string_view to_string(Solver solver) {
  switch (solver) {
    case Solver::Pruned: return "pruned";
    case Solver::Baseline: return "baseline";
    case Solver::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

std::optional<Solver> parse_solver(std::string_view name) {
  if (name == "pruned") return Solver::Pruned;
  if (name == "baseline") return Solver::Baseline;
  if (name == "exhaustive") return Solver::Exhaustive;
  return std::nullopt;
}

std::string_view to_string(PruneRule rule) {
  return rule == PruneRule::Touching ? "touching" : "overlapping";
}

std::optional<PruneRule> parse_prune_rule(std::string_view name) {
  if (name == "touching") return PruneRule::Touching;
  if (name == "overlapping") return PruneRule::Overlapping;
  return std::nullopt;
}

std::uint64_t baseline_comparison_count(std::size_t length, std::size_t segments) {
  std::uint64_t total = 0;
  for (std::size_t k = 2; k <= segments && k <= length; ++k) {
    const std::uint64_t n = length - k + 1;
    total += n * (n + 1) / 2;
  }
  return total;
}

LevelTable first_level(const PrefixSums& ps, ScoreFamily family) {
  const std::size_t length = ps.size();
  LevelTable t = empty_table(1, length);
  BorderList hi(ps, 1, Orientation::Max);
  BorderList lo(ps, 1, Orientation::Min);
  for (Index i = 1; i <= length; ++i) {
    hi.update(i);
    lo.update(i);
    t.score[i] = segment_score(family, ps, {1, i});
    t.start[i] = 1;
    t.right[i] = {lo.extreme_suffix().mean, hi.extreme_suffix().mean};
  }
  return t;
}

LevelTable segment_level(const LevelTable& prev, const PrefixSums& ps, ScoreFamily family,
                         Counters& counters, std::string* tree_dot, PruneRule prune) {
  const std::size_t length = ps.size();
  const std::size_t k = prev.level + 1;
  LevelTable t = empty_table(k, length);
  if (k > length) return t;

  struct Live {
    Index start;
    Interval left;  // extreme prefix means of D[start, i]
  };

  CandidateSet candidates(length);
  BorderTree max_tree(ps, Orientation::Max);
  BorderTree min_tree(ps, Orientation::Min);
  std::vector<Live> live;

  // Positions below k are never candidates, but both trees must still see them.
  for (Index i = 1; i < k; ++i) {
    max_tree.update(candidates, i);
    min_tree.update(candidates, i);
  }

  for (Index i = k; i <= length; ++i) {
    const double x = ps.sum(i, i);
    candidates.insert(i);
    live.push_back({i, {x, x}});
    max_tree.update(candidates, i);
    min_tree.update(candidates, i);
    counters.max_candidates = std::max(counters.max_candidates, candidates.size());

    std::size_t kept = 0;
    for (Live& cand : live) {
      if (cand.start != i) {
        const double m = ps.mean(cand.start, i);
        cand.left.lo = std::min(cand.left.lo, m);
        cand.left.hi = std::max(cand.left.hi, m);
      }
      const Interval& right = prev.right[cand.start - 1];
      const bool hit = prune == PruneRule::Touching ? intervals_intersect(right, cand.left)
                                                    : intervals_overlap(right, cand.left);
      if (hit) {
        candidates.erase(cand.start);
        max_tree.remove_candidate(candidates, cand.start);
        min_tree.remove_candidate(candidates, cand.start);
        ++counters.deletions;
        counters.lifetimes.push_back({k, cand.start, i - cand.start});
      } else {
        live[kept++] = cand;
      }
    }
    live.resize(kept);

    Index best = i;
    double best_score = prev.score[i - 1] + segment_score(family, ps, {i, i});
    if (live.empty()) {
      ++counters.fallbacks;
      ++counters.comparisons;
    } else {
      best_score = -std::numeric_limits<double>::infinity();
      best = 0;
      for (const Live& cand : live) {
        const double v = prev.score[cand.start - 1] + segment_score(family, ps, {cand.start, i});
        if (best == 0 || v > best_score) {
          best = cand.start;
          best_score = v;
        }
      }
      counters.comparisons += live.size();
    }
    counters.baseline_comparisons += i - k + 1;

    t.score[i] = best_score;
    t.start[i] = best;
    if (candidates.contains(best)) {
      t.right[i] = {min_tree.query(best).mean, max_tree.query(best).mean};
    } else {
      t.right[i] = {x, x};  // fallback: best == i
    }
  }

  for (const Live& cand : live) counters.lifetimes.push_back({k, cand.start, length + 1 - cand.start});

  counters.tree_work += max_tree.work() + min_tree.work();
  counters.max_tree_work = std::max({counters.max_tree_work, max_tree.work(), min_tree.work()});
  counters.peak_tree_slots =
      std::max({counters.peak_tree_slots, max_tree.peak_slots(), min_tree.peak_slots()});
  if (tree_dot) *tree_dot = max_tree.to_dot();
  return t;
}

LevelTable baseline_level(const LevelTable& prev, const PrefixSums& ps, ScoreFamily family,
                          Counters& counters, Execution execution) {
  const std::size_t length = ps.size();
  const std::size_t k = prev.level + 1;
  LevelTable t = empty_table(k, length);
  for (Index i = k; i <= length; ++i) {
    const auto best = execution == Execution::Parallel
                          ? kernels::best_start_parallel(prev.score, ps, family, k, i)
                          : kernels::best_start_serial(prev.score, ps, family, k, i);
    t.score[i] = best.score;
    t.start[i] = best.start;
    counters.comparisons += i - k + 1;
    counters.baseline_comparisons += i - k + 1;
  }
  for (Index j = k; j <= length; ++j) counters.lifetimes.push_back({k, j, length + 1 - j});
  return t;
}

SegmentationResult describe(const PrefixSums& ps, ScoreFamily family,
                            std::vector<Index> breakpoints, double total_score) {
  SegmentationResult r;
  Index begin = 1;
  auto add = [&](Index end) {
    const SegmentSpan span{begin, end};
    r.segments.push_back({span, ps.mean(span), segment_score(family, ps, span)});
    begin = end + 1;
  };
  for (Index b : breakpoints) add(b);
  add(ps.size());
  r.breakpoints = std::move(breakpoints);
  r.total_score = total_score;
  return r;
}

namespace {

template <typename LevelFn>
SegmentationResult dynamic_program(const Sequence& seq, ScoreFamily family, std::size_t segments,
                                   const SegmentOptions& options, LevelFn&& next_level) {
  check_segments(seq.size(), segments);
  require_domain(family, seq);
  const PrefixSums ps(seq);
  Counters counters;
  std::vector<LevelTable> tables;
  std::vector<std::string> dumps;
  tables.push_back(first_level(ps, family));
  for (std::size_t k = 2; k <= segments; ++k) {
    std::string dot;
    tables.push_back(next_level(tables.back(), ps, counters, options.capture_tree_dot ? &dot : nullptr));
    if (options.capture_tree_dot) dumps.push_back(std::move(dot));
  }
  SegmentationResult r =
      describe(ps, family, backtrack(tables, seq.size()), tables.back().score[seq.size()]);
  r.counters = std::move(counters);
  if (options.keep_tables) r.tables = std::move(tables);
  r.tree_dumps = std::move(dumps);
  return r;
}

}  // namespace

SegmentationResult segment(const Sequence& seq, ScoreFamily family, std::size_t segments,
                           const SegmentOptions& options) {
  return dynamic_program(seq, family, segments, options,
                         [&](const LevelTable& prev, const PrefixSums& ps, Counters& c, std::string* dot) {
                           return segment_level(prev, ps, family, c, dot, options.prune);
                         });
}

SegmentationResult segment_baseline(const Sequence& seq, ScoreFamily family,
                                    std::size_t segments, const SegmentOptions& options) {
  SegmentOptions opts = options;
  opts.capture_tree_dot = false;
  return dynamic_program(seq, family, segments, opts,
                         [&](const LevelTable& prev, const PrefixSums& ps, Counters& c, std::string*) {
                           return baseline_level(prev, ps, family, c, options.execution);
                         });
}

SegmentationResult segment_exhaustive(const Sequence& seq, ScoreFamily family,
                                      std::size_t segments) {
  const std::size_t length = seq.size();
  check_segments(length, segments);
  require_domain(family, seq);

  // C(L-1, K-1) with early exit past the limit.
  const std::uint64_t n = length - 1;
  const std::uint64_t r = segments - 1;
  std::uint64_t count = 1;
  for (std::uint64_t q = 1; q <= r; ++q) {
    count = count * (n - r + q) / q;
    if (count > kExhaustiveLimit) {
      std::ostringstream os;
      os << "exhaustive search over C(" << n << ", " << r << ") segmentations exceeds "
         << kExhaustiveLimit;
      throw InstanceTooLarge(os.str());
    }
  }

  const PrefixSums ps(seq);
  std::vector<Index> cut(r);
  for (std::size_t q = 0; q < r; ++q) cut[q] = q + 1;

  // Later breakpoints compared first: the smallest last start wins, as in the DP.
  auto earlier = [](const std::vector<Index>& a, const std::vector<Index>& b) {
    for (std::size_t q = a.size(); q-- > 0;) {
      if (a[q] != b[q]) return a[q] < b[q];
    }
    return false;
  };

  std::vector<Index> best_cut;
  double best = -std::numeric_limits<double>::infinity();
  bool have = false;
  while (true) {
    double total = 0.0;
    Index begin = 1;
    for (std::size_t q = 0; q <= r; ++q) {
      const Index end = q < r ? cut[q] : length;
      const double s = segment_score(family, ps, {begin, end});
      total = q == 0 ? s : total + s;
      begin = end + 1;
    }
    if (!have || total > best || (total == best && earlier(cut, best_cut))) {
      best = total;
      best_cut = cut;
      have = true;
    }
    // Next combination of r values from 1..n in increasing order.
    std::size_t q = r;
    while (q > 0 && cut[q - 1] == n - r + q) --q;
    if (q == 0) break;
    ++cut[q - 1];
    for (std::size_t p = q; p < r; ++p) cut[p] = cut[p - 1] + 1;
  }
  return describe(ps, family, std::move(best_cut), best);
}

SegmentationResult run_solver(Solver solver, const Sequence& seq, ScoreFamily family,
                              std::size_t segments, const SegmentOptions& options) {
  switch (solver) {
    case Solver::Pruned: return segment(seq, family, segments, options);
    case Solver::Baseline: return segment_baseline(seq, family, segments, options);
    case Solver::Exhaustive: return segment_exhaustive(seq, family, segments);
  }
  throw Error("unknown solver");
}

}  // namespace logseg
