#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logseg {

/// Sequence positions are 1-based everywhere in the public API.
using Index = std::size_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value falls outside the support of the chosen score family.
class DomainError : public Error {
 public:
  DomainError(Index index, double value, const std::string& what)
      : Error(what), index_(index), value_(value) {}
  Index index() const { return index_; }
  double value() const { return value_; }

 private:
  Index index_;
  double value_;
};

/// More segments requested than there are points.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class InvalidSequence : public Error {
 public:
  using Error::Error;
};

/// Immutable, non-empty, finite-valued sequence.
class Sequence {
 public:
  explicit Sequence(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  /// 1-based access.
  double operator[](Index i) const { return values_[i - 1]; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

struct SegmentSpan {
  Index begin;  // inclusive
  Index end;    // inclusive
  std::size_t length() const { return end - begin + 1; }
  friend bool operator==(const SegmentSpan&, const SegmentSpan&) = default;
};

/// Cumulative sums: cum[0] = 0, cum[i] = cum[i-1] + D_i.
class PrefixSums {
 public:
  explicit PrefixSums(const Sequence& seq);

  std::size_t size() const { return cum_.size() - 1; }
  std::span<const double> cumulative() const { return cum_; }

  double sum(Index b, Index e) const { return cum_[e] - cum_[b - 1]; }
  double mean(Index b, Index e) const {
    return (cum_[e] - cum_[b - 1]) / static_cast<double>(e - b + 1);
  }
  double sum(SegmentSpan s) const { return sum(s.begin, s.end); }
  double mean(SegmentSpan s) const { return mean(s.begin, s.end); }

 private:
  std::vector<double> cum_;
};

PrefixSums build_prefix_sums(const Sequence& seq);
double segment_mean(const PrefixSums& ps, SegmentSpan span);

/// One-dimensional log-linear families with S(x) = x.
///
/// Scores are the supremum over the natural parameter of n*Z(r) + r*s with
/// every segmentation-invariant additive constant dropped:
///   Gaussian (unit variance): 0.5 * s^2 / n   (drops -0.5*sum x^2 and the 2*pi term)
///   Poisson:                  s*ln(s/n) - s   (drops -sum ln(x!))
///   Bernoulli:                s*ln(m) + (n-s)*ln(1-m), m = s/n
/// with 0*ln(0) taken as 0.
enum class ScoreFamily { Gaussian, Poisson, Bernoulli };

std::string_view to_string(ScoreFamily family);
std::optional<ScoreFamily> parse_score_family(std::string_view name);

namespace detail {
// x * ln(y) with the convention 0 * ln(0) = 0.
inline double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }
}  // namespace detail

/// Closed-form optimal score of a segment with `count` points summing to `sum`.
inline double score_from_sum(ScoreFamily family, double count, double sum) {
  switch (family) {
    case ScoreFamily::Gaussian:
      return 0.5 * sum * sum / count;
    case ScoreFamily::Poisson:
      return detail::xlogy(sum, sum / count) - sum;
    case ScoreFamily::Bernoulli: {
      const double m = sum / count;
      return detail::xlogy(sum, m) + detail::xlogy(count - sum, 1.0 - m);
    }
  }
  return 0.0;
}

double segment_score(ScoreFamily family, const PrefixSums& ps, SegmentSpan span);

/// Log-likelihood term n*Z(r) + r*s at a fixed natural parameter (same
/// constants dropped as in score_from_sum). Used to check the supremum.
double score_at_parameter(ScoreFamily family, double count, double sum, double natural);

struct DomainViolation {
  Index index;  // 1-based
  double value;
};

/// First value outside the family's support, if any.
std::optional<DomainViolation> validate_domain(ScoreFamily family, const Sequence& seq);

/// Throws DomainError on the first violation.
void require_domain(ScoreFamily family, const Sequence& seq);

}  // namespace logseg
