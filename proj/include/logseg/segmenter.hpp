#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "logseg/core_model.hpp"

namespace logseg {

/// Closed real interval [lo, hi].
struct Interval {
  double lo;
  double hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed-interval intersection; touching endpoints intersect.
inline bool intervals_intersect(Interval right, Interval left) {
  return right.lo <= left.hi && right.hi >= left.lo;
}

/// Open-interval intersection; touching endpoints do not count.
inline bool intervals_overlap(Interval right, Interval left) {
  return right.lo < left.hi && right.hi > left.lo;
}

/// When a candidate is deleted. Touching also prunes candidates that are merely
/// tied with the optimum, which keeps scores exact but can change which of two
/// equal-scoring segmentations is returned. Overlapping only prunes candidates
/// that are strictly beaten, so the smallest-start tie rule survives.
enum class PruneRule { Touching, Overlapping };

std::string_view to_string(PruneRule rule);
std::optional<PruneRule> parse_prune_rule(std::string_view name);

/// One DP level: for each end position i (valid for i >= level), the best
/// score u(i) of a level-segmentation of D[1, i], the start c(i) of its last
/// segment, and that segment's right interval v(i). Indexed 0..L.
struct LevelTable {
  std::size_t level = 0;
  std::vector<double> score;
  std::vector<Interval> right;
  std::vector<Index> start;
};

struct LifetimeRecord {
  std::size_t level;
  Index candidate;
  std::size_t lifetime;
  friend bool operator==(const LifetimeRecord&, const LifetimeRecord&) = default;
};

/// Instrumentation for levels >= 2 (level 1 has a single forced candidate).
struct Counters {
  /// Candidate evaluations at the argmax step.
  std::uint64_t comparisons = 0;
  /// Evaluations the unpruned DP performs under the same validity rule (j >= level).
  std::uint64_t baseline_comparisons = 0;
  std::uint64_t deletions = 0;
  /// Steps where every candidate was pruned and the newest one was scored anyway.
  std::uint64_t fallbacks = 0;
  /// Border-tree walk iterations, all trees.
  std::uint64_t tree_work = 0;
  /// Largest walk total of any single tree.
  std::uint64_t max_tree_work = 0;
  /// Largest candidate set seen.
  std::size_t max_candidates = 0;
  /// Largest arena high-water mark (root included) of any tree.
  std::size_t peak_tree_slots = 0;
  /// Lifetime j - c of every candidate; j = L + 1 for survivors.
  std::vector<LifetimeRecord> lifetimes;

  /// comparisons / baseline_comparisons, 1.0 when nothing was comparable (K = 1).
  double performance_ratio() const;
};

enum class Solver { Pruned, Baseline, Exhaustive };
enum class Execution { Serial, Parallel };

std::string_view to_string(Solver solver);
std::optional<Solver> parse_solver(std::string_view name);

struct SegmentInfo {
  SegmentSpan span;
  double mean;
  double score;
};

struct SegmentationResult {
  /// Last index of each of the first K-1 segments.
  std::vector<Index> breakpoints;
  std::vector<SegmentInfo> segments;
  double total_score = 0.0;
  Counters counters;
  /// Level tables 1..K when SegmentOptions::keep_tables is set.
  std::vector<LevelTable> tables;
  /// Final Max border tree of each level >= 2 when capture_tree_dot is set.
  std::vector<std::string> tree_dumps;
};

struct SegmentOptions {
  Execution execution = Execution::Serial;  // baseline solver only
  PruneRule prune = PruneRule::Overlapping;  // pruned solver only
  bool keep_tables = false;
  bool capture_tree_dot = false;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Largest C(L-1, K-1) the exhaustive solver accepts.
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

/// Level 1: u(i) = score([1, i]) and v(i) = right interval of D[1, i].
LevelTable first_level(const PrefixSums& ps, ScoreFamily family);

/// Pruned level update: advances level k-1 to k, deleting candidates whose
/// left interval meets the right interval stored for the preceding prefix.
LevelTable segment_level(const LevelTable& prev, const PrefixSums& ps, ScoreFamily family,
                         Counters& counters, std::string* tree_dot = nullptr,
                         PruneRule prune = PruneRule::Overlapping);

/// Unpruned level update. Right intervals are not maintained.
LevelTable baseline_level(const LevelTable& prev, const PrefixSums& ps, ScoreFamily family,
                          Counters& counters, Execution execution = Execution::Serial);

SegmentationResult segment(const Sequence& seq, ScoreFamily family, std::size_t segments,
                           const SegmentOptions& options = {});
SegmentationResult segment_baseline(const Sequence& seq, ScoreFamily family,
                                    std::size_t segments, const SegmentOptions& options = {});
/// Enumerates every segmentation. Throws InstanceTooLarge past kExhaustiveLimit.
SegmentationResult segment_exhaustive(const Sequence& seq, ScoreFamily family,
                                      std::size_t segments);

SegmentationResult run_solver(Solver solver, const Sequence& seq, ScoreFamily family,
                              std::size_t segments, const SegmentOptions& options = {});

/// Number of argmax evaluations of the unpruned DP for levels 2..K.
std::uint64_t baseline_comparison_count(std::size_t length, std::size_t segments);

/// Builds spans, means and scores from breakpoints.
SegmentationResult describe(const PrefixSums& ps, ScoreFamily family,
                            std::vector<Index> breakpoints, double total_score);

}  // namespace logseg
