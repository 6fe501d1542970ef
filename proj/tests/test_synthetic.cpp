// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "bayescite/errors.hpp"
#include "bayescite/estimation.hpp"
#include "support/reference_data.hpp"

namespace bayescite {
namespace {

using testing::kReferenceJournals;

// Reference xoshiro256** step on an explicit state, transcribed from the
// published algorithm; used to check the library's generator output.
std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t reference_next(std::array<std::uint64_t, 4>& s) {
  const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
  const std::uint64_t t = s[1] << 17;
  s[2] ^= s[0];
  s[3] ^= s[1];
  s[1] ^= s[2];
  s[0] ^= s[3];
  s[2] ^= t;
  s[3] = rotl(s[3], 45);
  return result;
}

TEST(Splitmix64, KnownSequence) {
  std::uint64_t state = 0;
  EXPECT_EQ(splitmix64(state), 0xe220a8397b1dcdafULL);
  state = 1234567;
  const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL,
                                    9817491932198370423ULL, 4593380528125082431ULL,
                                    16408922859458223821ULL};
  for (std::uint64_t e : expected) EXPECT_EQ(splitmix64(state), e);
}

TEST(Xoshiro256, ReferenceStepOnKnownState) {
  // Sanity check of the oracle itself against the published first outputs
  // from state {1, 2, 3, 4}.
  std::array<std::uint64_t, 4> s{1, 2, 3, 4};
  EXPECT_EQ(reference_next(s), 11520u);
  EXPECT_EQ(reference_next(s), 0u);
  EXPECT_EQ(reference_next(s), 1509978240u);
  EXPECT_EQ(reference_next(s), 1215971899390074240u);
}

TEST(Xoshiro256, MatchesReferenceAfterSplitmixSeeding) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefcafef00dULL}) {
    std::uint64_t sm = seed;
    std::array<std::uint64_t, 4> s{};
    for (auto& w : s) w = splitmix64(sm);
    Xoshiro256 rng(seed);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(rng.next(), reference_next(s)) << seed << " " << i;
  }
}

TEST(Xoshiro256, UniformIsOpenInterval) {
  Xoshiro256 rng(9);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  constexpr int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / kN, 0.5, 0.003);
}

TEST(Xoshiro256, StreamsDiffer) {
  auto a = Xoshiro256::for_stream(7, 0);
  auto b = Xoshiro256::for_stream(7, 1);
  auto c = Xoshiro256::for_stream(8, 0);
  const auto va = a.next();
  EXPECT_NE(va, b.next());
  EXPECT_NE(va, c.next());
  EXPECT_EQ(va, Xoshiro256::for_stream(7, 0).next());
}

std::vector<Count> counts_of(const CitationSample& s) {
  return {s.counts().begin(), s.counts().end()};
}

struct Moments {
  double mean;
  double var;
};

template <typename F>
Moments sample_moments(int n, F draw) {
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = draw();
    sum += v;
    sum2 += v * v;
  }
  const double m = sum / n;
  return {m, (sum2 - n * m * m) / (n - 1)};
}

TEST(GammaVariate, MomentsAcrossShapes) {
  Xoshiro256 rng(123);
  for (auto [shape, rate] : {std::pair{0.3, 2.0}, {1.0, 1.0}, {1.99, 0.21}, {50.0, 5.0}}) {
    const Moments m = sample_moments(200000, [&] { return gamma_variate(rng, shape, rate); });
    const double mean = shape / rate, var = shape / (rate * rate);
    EXPECT_NEAR(m.mean, mean, 0.01 * mean) << shape;
    EXPECT_NEAR(m.var, var, 0.03 * var) << shape;
  }
  EXPECT_THROW(gamma_variate(rng, 0.0, 1.0), DomainError);
  EXPECT_THROW(gamma_variate(rng, 1.0, -1.0), DomainError);
}

TEST(PoissonVariate, MomentsOnBothSidesOfTheSwitch) {
  Xoshiro256 rng(321);
  for (double theta : {0.01, 0.7, 5.0, 9.99, 10.0, 47.3, 1500.0}) {
    const Moments m = sample_moments(200000, [&] {
      return static_cast<double>(poisson_variate(rng, theta));
    });
    EXPECT_NEAR(m.mean, theta, 5.0 * std::sqrt(theta / 200000.0)) << theta;
    EXPECT_NEAR(m.var / theta, 1.0, 0.03) << theta;
  }
  EXPECT_EQ(poisson_variate(rng, 0.0), 0);  // a gamma draw can underflow to zero
  EXPECT_THROW(poisson_variate(rng, -1.0), DomainError);
  EXPECT_THROW(poisson_variate(rng, std::nan("")), DomainError);
}

TEST(NormalVariate, Moments) {
  Xoshiro256 rng(5);
  const Moments m = sample_moments(200000, [&] { return normal_variate(rng); });
  EXPECT_NEAR(m.mean, 0.0, 0.01);
  EXPECT_NEAR(m.var, 1.0, 0.01);
}

TEST(SampleNegbin, Determinism) {
  const SimulationConfig cfg{1.99, 0.21, 5000, 77};
  const CitationSample a = sample_negbin(cfg);
  const CitationSample b = sample_negbin(cfg);
  EXPECT_EQ(counts_of(a), counts_of(b));
  EXPECT_NE(counts_of(a), counts_of(sample_negbin({1.99, 0.21, 5000, 78})));
  EXPECT_EQ(a.label(), "synthetic");
  EXPECT_EQ(sample_negbin(cfg, "x").label(), "x");
}

TEST(SampleNegbin, MomentsAndGeometricCase) {
  const CitationSample s = sample_negbin({1.99, 0.21, 100000, 1});
  EXPECT_NEAR(s.mean(), 1.99 / 0.21, 0.02 * 1.99 / 0.21);
  const double id = s.variance() / s.mean();
  EXPECT_NEAR(id, 1.21 / 0.21, 0.05 * 1.21 / 0.21);

  // alpha = beta = 1 is geometric with P(X = 0) = 1/2.
  const CitationSample g = sample_negbin({1.0, 1.0, 100000, 2});
  const auto zeros = std::count(g.counts().begin(), g.counts().end(), Count{0});
  EXPECT_NEAR(static_cast<double>(zeros) / 100000.0, 0.5, 0.01);
}

TEST(SampleNegbin, EmpiricalCdfMatchesExactCdf) {
  for (const auto& j : kReferenceJournals) {
    const GammaPrior prior(j.alpha_hat, j.beta_hat);
    const CitationSample s = sample_negbin({j.alpha_hat, j.beta_hat, 100000, 2718});
    const CountHistogram h = s.histogram();
    double cdf = 0.0, ecdf = 0.0, gap = 0.0;
    std::size_t bin = 0;
    for (Count x = 0; x <= s.max(); ++x) {
      cdf += negbin_pmf(x, prior);
      if (bin < h.size() && h.values[bin] == x) ecdf += h.weights[bin++] / 100000.0;
      gap = std::max(gap, std::abs(cdf - ecdf));
    }
    EXPECT_LT(gap, 0.01) << j.name;
  }
}

TEST(SamplePoisson, EquidispersionAndMean) {
  const CitationSample s = sample_poisson(5.0, 100000, 3);
  const double id = s.variance() / s.mean();
  EXPECT_GE(id, 0.97);
  EXPECT_LE(id, 1.03);
  EXPECT_NEAR(s.mean(), 5.0, 0.1);
  EXPECT_EQ(counts_of(s), counts_of(sample_poisson(5.0, 100000, 3)));
  EXPECT_THROW(sample_poisson(0.0, 10, 1), DomainError);
  EXPECT_THROW(sample_poisson(1.0, 0, 1), DomainError);
}

TEST(SimulationConfig, Validates) {
  EXPECT_NO_THROW((SimulationConfig{1.0, 1.0, 1, 0}.validate()));
  EXPECT_THROW((SimulationConfig{0.0, 1.0, 1, 0}.validate()), DomainError);
  EXPECT_THROW((SimulationConfig{1.0, -1.0, 1, 0}.validate()), DomainError);
  EXPECT_THROW((SimulationConfig{1.0, 1.0, 0, 0}.validate()), DomainError);
  EXPECT_EQ(sample_negbin({1.0, 1.0, 1, 0}).size(), 1u);
}

TEST(RecoveryExperiment, ReferenceParametersRecovered) {
  std::uint64_t seed = 100;
  for (const auto& j : kReferenceJournals) {
    const RecoveryRecord r = recovery_experiment({j.alpha_hat, j.beta_hat, 100000, seed++});
    ASSERT_TRUE(r.selection.negbin.has_value()) << j.name;
    EXPECT_TRUE(r.selection.negbin->converged) << j.name;
    EXPECT_LT(*r.alpha_rel_error, 0.05) << j.name;
    EXPECT_LT(*r.beta_rel_error, 0.05) << j.name;
    EXPECT_GT(*r.aic_margin, 0.0) << j.name;
    EXPECT_EQ(r.selection.winner, Model::kNegBin) << j.name;
    EXPECT_FALSE(r.wide_errors) << j.name;

    const CitationSample s = sample_negbin(r.config);
    const NbGradient g = negbin_gradient(s, r.selection.negbin->alpha_hat,
                                         r.selection.negbin->beta_hat);
    EXPECT_LT(std::max(std::abs(g.d_alpha), std::abs(g.d_beta)), 1e-8) << j.name;
  }
}

TEST(RecoveryExperiment, SmallSampleCompletes) {
  int flagged = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RecoveryRecord r;
    ASSERT_NO_THROW(r = recovery_experiment({1.99, 0.21, 50, seed}));
    if (r.selection.negbin) {
      EXPECT_EQ(r.wide_errors, *r.alpha_rel_error >= 0.05 || *r.beta_rel_error >= 0.05);
    } else {
      EXPECT_TRUE(r.wide_errors);
      EXPECT_FALSE(r.aic_margin.has_value());
    }
    flagged += r.wide_errors;
  }
  EXPECT_GT(flagged, 10);  // fifty observations cannot pin both parameters to 5%
}

// One fixed seed; the selection rate over many seeds is covered with the
// estimation tests.
TEST(RecoveryExperiment, PoissonTruthSelectsPoisson) {
  const ModelSelection sel = select_model(sample_poisson(5.0, 100000, 4242));
  EXPECT_EQ(sel.winner, Model::kPoisson);
}

}  // namespace
}  // namespace bayescite
