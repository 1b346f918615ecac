#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "logseg/core_model.hpp"
#include "logseg/segmenter.hpp"

namespace logseg {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what) : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// One real per line, or comma-separated rows with a 0-based column selector
/// (column 0 by default). A non-numeric first row followed by data is a header.
Sequence parse_sequence(std::istream& in, std::optional<std::size_t> column = std::nullopt);
Sequence load_sequence(const std::filesystem::path& path,
                       std::optional<std::size_t> column = std::nullopt);

/// One value per line, round-trip precision.
void write_sequence(std::ostream& out, const Sequence& seq);
void save_sequence(const std::filesystem::path& path, const Sequence& seq);

/// segment_index,start,end,mean,score (1-based, inclusive).
void write_segments_csv(std::ostream& out, const SegmentationResult& result);
/// level,candidate_index,lifetime sorted by level then candidate.
void write_lifetimes_csv(std::ostream& out, const Counters& counters);

struct RunSummary {
  Solver solver;
  ScoreFamily family;
  std::size_t segments;
  std::size_t length;
  std::uint64_t seed;
  double wall_time_ms;
};

/// comparisons, baseline_comparisons, performance_ratio, wall_time_ms,
/// total_score, K, L, model, solver, seed, plus deletions and fallbacks.
nlohmann::json stats_json(const RunSummary& run, const SegmentationResult& result);

/// Shortest decimal form that reads back to the same double.
std::string format_real(double x);

}  // namespace logseg
