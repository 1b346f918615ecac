#include "logseg/kernels.hpp"

#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace logseg::kernels {

namespace {

template <ScoreFamily F>
inline double score_t(double count, double sum) {
  return score_from_sum(F, count, sum);
}

inline bool better(double score, Index start, const BestStart& best) {
  return score > best.score || (score == best.score && start < best.start);
}

template <ScoreFamily F>
BestStart scan(const double* prev, const double* cum, Index first, Index last, Index i) {
  BestStart best{0, -std::numeric_limits<double>::infinity()};
  const double end_sum = cum[i];
  for (Index j = first; j <= last; ++j) {
    const double v = prev[j - 1] + score_t<F>(static_cast<double>(i - j + 1), end_sum - cum[j - 1]);
    if (v > best.score || best.start == 0) best = {j, v};
  }
  return best;
}

template <ScoreFamily F>
BestStart scan_parallel(const double* prev, const double* cum, Index first, Index i) {
  if (i - first + 1 < kParallelGrain) return scan<F>(prev, cum, first, i, i);
  BestStart best{0, -std::numeric_limits<double>::infinity()};
#pragma omp parallel
  {
#ifdef _OPENMP
    const Index threads = static_cast<Index>(omp_get_num_threads());
    const Index tid = static_cast<Index>(omp_get_thread_num());
#else
    const Index threads = 1;
    const Index tid = 0;
#endif
    const Index n = i - first + 1;
    const Index lo = first + n * tid / threads;
    const Index hi = first + n * (tid + 1) / threads;
    if (lo < hi) {
      const BestStart local = scan<F>(prev, cum, lo, hi - 1, i);
#pragma omp critical(logseg_best_start)
      {
        if (best.start == 0 || better(local.score, local.start, best)) best = local;
      }
    }
  }
  return best;
}

}  // namespace

BestStart best_start_serial(std::span<const double> prev_scores, const PrefixSums& ps,
                            ScoreFamily family, Index first, Index i) {
  const double* prev = prev_scores.data();
  const double* cum = ps.cumulative().data();
  switch (family) {
    case ScoreFamily::Gaussian: return scan<ScoreFamily::Gaussian>(prev, cum, first, i, i);
    case ScoreFamily::Poisson: return scan<ScoreFamily::Poisson>(prev, cum, first, i, i);
    case ScoreFamily::Bernoulli: return scan<ScoreFamily::Bernoulli>(prev, cum, first, i, i);
  }
  return {first, 0.0};
}

BestStart best_start_parallel(std::span<const double> prev_scores, const PrefixSums& ps,
                              ScoreFamily family, Index first, Index i) {
  const double* prev = prev_scores.data();
  const double* cum = ps.cumulative().data();
  switch (family) {
    case ScoreFamily::Gaussian: return scan_parallel<ScoreFamily::Gaussian>(prev, cum, first, i);
    case ScoreFamily::Poisson: return scan_parallel<ScoreFamily::Poisson>(prev, cum, first, i);
    case ScoreFamily::Bernoulli: return scan_parallel<ScoreFamily::Bernoulli>(prev, cum, first, i);
  }
  return {first, 0.0};
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace logseg::kernels
