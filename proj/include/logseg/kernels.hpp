#pragma once

#include <span>

#include "logseg/core_model.hpp"

namespace logseg::kernels {

struct BestStart {
  Index start;
  double score;
};

/// argmax over j in [first, i] of prev_scores[j-1] + score([j, i]).
/// Smallest j wins ties. prev_scores is indexed by end position 0..L.
BestStart best_start_serial(std::span<const double> prev_scores, const PrefixSums& ps,
                            ScoreFamily family, Index first, Index i);

/// OpenMP version of best_start_serial; returns the same start and bit-identical score.
BestStart best_start_parallel(std::span<const double> prev_scores, const PrefixSums& ps,
                              ScoreFamily family, Index first, Index i);

/// Candidate ranges shorter than this run serially inside best_start_parallel.
inline constexpr Index kParallelGrain = 2048;

int max_threads();

}  // namespace logseg::kernels
