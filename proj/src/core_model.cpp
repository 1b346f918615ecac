#include "logseg/core_model.hpp"

#include <cmath>
#include <sstream>

namespace logseg {

namespace {

double softplus(double r) { return r > 0 ? r + std::log1p(std::exp(-r)) : std::log1p(std::exp(r)); }

}  // namespace

Sequence::Sequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidSequence("sequence must contain at least one value");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      std::ostringstream os;
      os << "non-finite value at index " << (k + 1);
      throw InvalidSequence(os.str());
    }
  }
}

PrefixSums::PrefixSums(const Sequence& seq) : cum_(seq.size() + 1, 0.0) {
  const auto v = seq.values();
  for (std::size_t k = 0; k < v.size(); ++k) cum_[k + 1] = cum_[k] + v[k];
}

PrefixSums build_prefix_sums(const Sequence& seq) { return PrefixSums(seq); }

double segment_mean(const PrefixSums& ps, SegmentSpan span) { return ps.mean(span); }

std::string_view to_string(ScoreFamily family) {
  switch (family) {
    case ScoreFamily::Gaussian: return "gaussian";
    case ScoreFamily::Poisson: return "poisson";
    case ScoreFamily::Bernoulli: return "bernoulli";
  }
  return "unknown";
}

std::optional<ScoreFamily> parse_score_family(std::string_view name) {
  if (name == "gaussian") return ScoreFamily::Gaussian;
  if (name == "poisson") return ScoreFamily::Poisson;
  if (name == "bernoulli") return ScoreFamily::Bernoulli;
  return std::nullopt;
}

double segment_score(ScoreFamily family, const PrefixSums& ps, SegmentSpan span) {
  return score_from_sum(family, static_cast<double>(span.length()), ps.sum(span));
}

double score_at_parameter(ScoreFamily family, double count, double sum, double natural) {
  switch (family) {
    case ScoreFamily::Gaussian:
      return -0.5 * count * natural * natural + natural * sum;
    case ScoreFamily::Poisson:
      return -count * std::exp(natural) + natural * sum;
    case ScoreFamily::Bernoulli:
      return -count * softplus(natural) + natural * sum;
  }
  return 0.0;
}

std::optional<DomainViolation> validate_domain(ScoreFamily family, const Sequence& seq) {
  const auto v = seq.values();
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double x = v[k];
    bool ok = true;
    switch (family) {
      case ScoreFamily::Gaussian: ok = std::isfinite(x); break;
      case ScoreFamily::Poisson: ok = x >= 0.0; break;
      case ScoreFamily::Bernoulli: ok = x == 0.0 || x == 1.0; break;
    }
    if (!ok) return DomainViolation{k + 1, x};
  }
  return std::nullopt;
}

void require_domain(ScoreFamily family, const Sequence& seq) {
  if (auto bad = validate_domain(family, seq)) {
    std::ostringstream os;
    os << "value " << bad->value << " at index " << bad->index << " is outside the "
       << to_string(family) << " support";
    throw DomainError(bad->index, bad->value, os.str());
  }
}

}  // namespace logseg
