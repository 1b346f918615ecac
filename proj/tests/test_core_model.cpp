#include <doctest.h>

#include <cmath>
#include <random>

#include "logseg/core_model.hpp"
#include "oracles.hpp"

using namespace logseg;

namespace {
const std::vector<double> kExample{2, 0, 1, 2, 1, 1, 9, 2, 5, 0};
}

TEST_CASE("prefix sums") {
  const PrefixSums ps(Sequence({2, 0, 1, 2}));
  const auto cum = ps.cumulative();
  CHECK(std::vector<double>(cum.begin(), cum.end()) == std::vector<double>{0, 2, 2, 3, 5});

  const PrefixSums one = build_prefix_sums(Sequence({5}));
  CHECK(one.size() == 1);
  CHECK(one.cumulative()[1] == 5.0);
}

TEST_CASE("sequence rejects empty and non-finite input") {
  CHECK_THROWS_AS(Sequence({}), InvalidSequence);
  CHECK_THROWS_AS(Sequence({1.0, std::nan("")}), InvalidSequence);
  CHECK_THROWS_AS(Sequence({INFINITY}), InvalidSequence);
}

TEST_CASE("segment mean") {
  const Sequence seq(kExample);
  const PrefixSums ps(seq);
  CHECK(segment_mean(ps, {1, 2}) == 1.0);
  CHECK(segment_mean(ps, {3, 3}) == 1.0);
  for (Index b = 1; b <= seq.size(); ++b) CHECK(segment_mean(ps, {b, b}) == seq[b]);
}

TEST_CASE("segment scores") {
  SUBCASE("gaussian matches the L2 form") {
    const std::vector<double> v{1, 1, 1};
    const PrefixSums ps(Sequence{v});
    const double score = segment_score(ScoreFamily::Gaussian, ps, {1, 3});
    CHECK(score == doctest::Approx(1.5));
    double sq = 0;
    for (double x : v) sq += x * x;
    CHECK(score == doctest::Approx(-0.5 * oracle::l2_error(v, {}) + 0.5 * sq));
  }
  SUBCASE("bernoulli of a constant segment is zero") {
    const PrefixSums zeros(Sequence({0, 0, 0, 0}));
    CHECK(segment_score(ScoreFamily::Bernoulli, zeros, {1, 4}) == 0.0);
    const PrefixSums ones(Sequence({1, 1}));
    CHECK(segment_score(ScoreFamily::Bernoulli, ones, {1, 2}) == 0.0);
  }
  SUBCASE("poisson closed form agrees with a numeric supremum") {
    const PrefixSums ps(Sequence({2, 2}));
    const double closed = segment_score(ScoreFamily::Poisson, ps, {1, 2});
    const double numeric = oracle::golden_max(
        [](double lambda) { return 2.0 * -lambda + std::log(lambda) * 4.0; }, 1e-6, 20.0);
    CHECK(numeric == doctest::Approx(-1.2274112777602189).epsilon(1e-9));
    CHECK(closed == doctest::Approx(numeric).epsilon(1e-9));
    CHECK(closed == doctest::Approx(4 * std::log(2.0) - 4).epsilon(1e-12));
  }
  SUBCASE("poisson zero segment") {
    const PrefixSums ps(Sequence({0, 0}));
    CHECK(segment_score(ScoreFamily::Poisson, ps, {1, 2}) == 0.0);
  }
}

TEST_CASE("domain validation") {
  CHECK_FALSE(validate_domain(ScoreFamily::Bernoulli, Sequence({0, 1, 1, 0})));
  const auto bad = validate_domain(ScoreFamily::Bernoulli, Sequence({0, 0.5}));
  REQUIRE(bad);
  CHECK(bad->index == 2);
  CHECK(bad->value == 0.5);
  CHECK_FALSE(validate_domain(ScoreFamily::Poisson, Sequence({3, 0, 7})));
  CHECK(validate_domain(ScoreFamily::Poisson, Sequence({3, -1}))->index == 2);
  CHECK_FALSE(validate_domain(ScoreFamily::Gaussian, Sequence({-1e300, 4})));
  CHECK_THROWS_AS(require_domain(ScoreFamily::Bernoulli, Sequence({2})), DomainError);
}

TEST_CASE("family names round trip") {
  for (auto f : {ScoreFamily::Gaussian, ScoreFamily::Poisson, ScoreFamily::Bernoulli})
    CHECK(parse_score_family(to_string(f)) == f);
  CHECK_FALSE(parse_score_family("gamma"));
}

TEST_CASE("property: sums are additive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = oracle::random_values(rng, 1 + rng() % 100, false);
    const PrefixSums ps(Sequence{v});
    const Index n = v.size();
    const Index i = 1 + rng() % n;
    const Index k = i + rng() % (n - i + 1);
    const double direct = oracle::direct_sum(v, i, k);
    CHECK(std::abs(ps.sum(i, k) - direct) <= 1e-9 * std::max(1.0, std::abs(direct)) + 1e-12);
    if (k > i) {
      const Index j = i + rng() % (k - i);
      const double split = ps.sum(i, j) + ps.sum(j + 1, k);
      CHECK(std::abs(ps.sum(i, k) - split) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("property: gaussian score sum equals half the sum of squares minus half the L2 error") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = oracle::random_values(rng, 1 + rng() % 100, false);
    const PrefixSums ps(Sequence{v});
    std::vector<Index> cuts;
    for (Index e = 1; e < v.size(); ++e)
      if (rng() % 5 == 0) cuts.push_back(e);
    double total = 0;
    Index b = 1;
    for (std::size_t s = 0; s <= cuts.size(); ++s) {
      const Index e = s < cuts.size() ? cuts[s] : v.size();
      total += segment_score(ScoreFamily::Gaussian, ps, {b, e});
      b = e + 1;
    }
    double sq = 0;
    for (double x : v) sq += x * x;
    const double expected = 0.5 * sq - 0.5 * oracle::l2_error(v, cuts);
    CHECK(std::abs(total - expected) <= 1e-9 * std::max(1.0, sq));
  }
}

TEST_CASE("property: closed-form score is the supremum over the natural parameter") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> param(-6.0, 6.0);
  struct Case {
    ScoreFamily family;
    bool discrete;
    int max_value;
  };
  for (const Case c : {Case{ScoreFamily::Gaussian, false, 0}, Case{ScoreFamily::Poisson, true, 6},
                       Case{ScoreFamily::Bernoulli, true, 1}}) {
    for (int span_trial = 0; span_trial < 10; ++span_trial) {
      auto v = oracle::random_values(rng, 30, c.discrete, c.max_value);
      const PrefixSums ps(Sequence{v});
      const Index b = 1 + rng() % 30;
      const Index e = b + rng() % (30 - b + 1);
      const double best = segment_score(c.family, ps, {b, e});
      const double n = static_cast<double>(e - b + 1);
      for (int k = 0; k < 100; ++k) {
        const double r = param(rng);
        CHECK(best >= score_at_parameter(c.family, n, ps.sum(b, e), r) - 1e-9);
      }
    }
  }
}
