#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logseg/core_model.hpp"
#include "logseg/generators.hpp"
#include "logseg/segmenter.hpp"

namespace logseg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kDomain = 3,
  kIo = 4,
  kParse = 5,
  kTooLarge = 6,
  kInternal = 7,
};

struct RunConfig {
  std::optional<std::string> input;
  std::optional<std::size_t> column;
  std::optional<GeneratorSpec> generator;
  ScoreFamily family = ScoreFamily::Gaussian;
  std::size_t segments = 1;
  Solver solver = Solver::Pruned;
  Execution execution = Execution::Serial;
  PruneRule prune = PruneRule::Overlapping;
  std::uint64_t seed = 0;
  /// Output paths; "-" is stdout. {seed} expands to the run's seed.
  std::optional<std::string> segments_out = "-";
  std::optional<std::string> stats_out;
  std::optional<std::string> lifetimes_out;
  std::optional<std::string> sequence_out;
  std::optional<std::string> tree_dot_out;
};

/// Executes one configuration. Errors are reported on `err` as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: parsing, optional seed sweep (--seeds, --jobs), exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logseg::cli
