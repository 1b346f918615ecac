#include "logseg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace logseg {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::optional<std::string_view> cell(std::string_view row, std::size_t column) {
  for (std::size_t c = 0;; ++c) {
    const auto comma = row.find(',');
    if (c == column) return trim(row.substr(0, comma));
    if (comma == std::string_view::npos) return std::nullopt;
    row.remove_prefix(comma + 1);
  }
}

std::optional<double> parse_real(std::string_view s) {
  double x = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return x;
}

}  // namespace

Sequence parse_sequence(std::istream& in, std::optional<std::size_t> column) {
  const std::size_t col = column.value_or(0);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  std::optional<std::size_t> pending_header;  // line of a non-numeric first row

  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto text = cell(row, col);
    if (!text) {
      std::ostringstream os;
      os << "line " << line_no << ": no column " << col;
      throw ParseError(line_no, os.str());
    }
    const auto x = parse_real(*text);
    if (!x) {
      if (first_row) {
        pending_header = line_no;
        first_row = false;
        continue;
      }
      std::ostringstream os;
      os << "line " << line_no << ": cannot parse '" << *text << "' as a number";
      throw ParseError(line_no, os.str());
    }
    if (!std::isfinite(*x)) {
      std::ostringstream os;
      os << "line " << line_no << ": non-finite value '" << *text << "'";
      throw ParseError(line_no, os.str());
    }
    first_row = false;
    values.push_back(*x);
  }
  if (values.empty()) {
    if (pending_header) {
      std::ostringstream os;
      os << "line " << *pending_header << ": no numeric data";
      throw ParseError(*pending_header, os.str());
    }
    throw ParseError(0, "input contains no values");
  }
  return Sequence(std::move(values));
}

Sequence load_sequence(const std::filesystem::path& path, std::optional<std::size_t> column) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return parse_sequence(in, column);
}

std::string format_real(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

void write_sequence(std::ostream& out, const Sequence& seq) {
  for (double x : seq.values()) out << format_real(x) << '\n';
}

void save_sequence(const std::filesystem::path& path, const Sequence& seq) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_sequence(out, seq);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_segments_csv(std::ostream& out, const SegmentationResult& result) {
  out << "segment_index,start,end,mean,score\n";
  for (std::size_t s = 0; s < result.segments.size(); ++s) {
    const auto& seg = result.segments[s];
    out << (s + 1) << ',' << seg.span.begin << ',' << seg.span.end << ',' << format_real(seg.mean)
        << ',' << format_real(seg.score) << '\n';
  }
}

void write_lifetimes_csv(std::ostream& out, const Counters& counters) {
  auto records = counters.lifetimes;
  std::sort(records.begin(), records.end(), [](const LifetimeRecord& a, const LifetimeRecord& b) {
    return a.level != b.level ? a.level < b.level : a.candidate < b.candidate;
  });
  out << "level,candidate_index,lifetime\n";
  for (const auto& r : records) out << r.level << ',' << r.candidate << ',' << r.lifetime << '\n';
}

nlohmann::json stats_json(const RunSummary& run, const SegmentationResult& result) {
  const Counters& c = result.counters;
  nlohmann::json j;
  j["comparisons"] = c.comparisons;
  j["baseline_comparisons"] = c.baseline_comparisons;
  j["performance_ratio"] = c.performance_ratio();
  j["wall_time_ms"] = run.wall_time_ms;
  j["total_score"] = result.total_score;
  j["K"] = run.segments;
  j["L"] = run.length;
  j["model"] = std::string(to_string(run.family));
  j["solver"] = std::string(to_string(run.solver));
  j["seed"] = run.seed;
  j["deletions"] = c.deletions;
  j["fallbacks"] = c.fallbacks;
  return j;
}

}  // namespace logseg
