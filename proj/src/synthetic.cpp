// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/synthetic.hpp"

#include <cmath>

#include "bayescite/errors.hpp"
#include "bayescite/kernels.hpp"
#include "bayescite/special_functions.hpp"

namespace bayescite {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

constexpr double kInversionLimit = 10.0;

Count poisson_inversion(Xoshiro256& rng, double theta) {
  const double u = rng.uniform();
  double p = std::exp(-theta);
  double cdf = p;
  Count k = 0;
  // The cap only matters when the cdf stalls below u through rounding.
  while (u > cdf && k < 1000) {
    ++k;
    p *= theta / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

// Hormann (1993), "The transformed rejection method for generating Poisson
// random variables", algorithm PTRS. Valid for theta >= 10.
Count poisson_ptrs(Xoshiro256& rng, double theta) {
  const double slam = std::sqrt(theta);
  const double loglam = std::log(theta);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double kd = std::floor((2.0 * a / us + b) * u + theta + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<Count>(kd);
    if (kd < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -theta + kd * loglam - log_gamma(kd + 1.0)) {
      return static_cast<Count>(kd);
    }
  }
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

Xoshiro256 Xoshiro256::for_stream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64's output is a bijection of its input, so distinct indices give
  // distinct keys for a fixed seed.
  std::uint64_t key = index;
  return Xoshiro256(seed ^ splitmix64(key));
}

std::uint64_t Xoshiro256::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() noexcept {
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double normal_variate(Xoshiro256& rng) {
  // Marsaglia polar method; the second variate is discarded to keep draws
  // stateless.
  for (;;) {
    const double u = 2.0 * rng.uniform() - 1.0;
    const double v = 2.0 * rng.uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double gamma_variate(Xoshiro256& rng, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw DomainError("gamma_variate: shape and rate must be positive");
  }
  if (shape < 1.0) {
    const double boosted = gamma_variate(rng, shape + 1.0, 1.0);
    return boosted * std::pow(rng.uniform(), 1.0 / shape) / rate;
  }
  // Marsaglia & Tsang (2000)
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = normal_variate(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

Count poisson_variate(Xoshiro256& rng, double theta) {
  if (theta == 0.0) return 0;  // gamma draws with tiny shape can underflow to zero
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("poisson_variate: theta must be nonnegative and finite");
  }
  return theta < kInversionLimit ? poisson_inversion(rng, theta) : poisson_ptrs(rng, theta);
}

void SimulationConfig::validate() const {
  if (n < 1) throw DomainError("SimulationConfig: n must be at least 1");
  static_cast<void>(GammaPrior(alpha_true, beta_true));
}

CitationSample sample_negbin(const SimulationConfig& cfg, std::string label) {
  cfg.validate();
  return CitationSample(std::move(label),
                        kernels::draw_negbin(GammaPrior(cfg.alpha_true, cfg.beta_true), cfg.n,
                                             cfg.seed));
}

CitationSample sample_poisson(double theta, std::size_t n, std::uint64_t seed,
                              std::string label) {
  if (n < 1) throw DomainError("sample_poisson: n must be at least 1");
  return CitationSample(std::move(label), kernels::draw_poisson(theta, n, seed));
}

RecoveryRecord recovery_experiment(const SimulationConfig& cfg) {
  const CitationSample sample = sample_negbin(cfg);
  RecoveryRecord rec{cfg, select_model(sample), std::nullopt, std::nullopt, std::nullopt, true};
  if (rec.selection.negbin) {
    const NegBinFit& nb = *rec.selection.negbin;
    rec.alpha_rel_error = std::abs(nb.alpha_hat - cfg.alpha_true) / cfg.alpha_true;
    rec.beta_rel_error = std::abs(nb.beta_hat - cfg.beta_true) / cfg.beta_true;
    rec.aic_margin = rec.selection.poisson.aic - nb.aic;
    rec.wide_errors = *rec.alpha_rel_error >= 0.05 || *rec.beta_rel_error >= 0.05;
  }
  return rec;
}

}  // namespace bayescite
