// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// Probabilistic primitives of the Poisson-gamma citation model: the per-journal
// Poisson likelihood, its gamma prior over journals, the negative binomial marginal
// and the conjugate posterior update.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bayescite {

using Count = std::int64_t;

/// Gamma(shape = alpha, rate = beta) prior on the Poisson mean.
class GammaPrior {
 public:
  GammaPrior(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double mean() const noexcept { return alpha_ / beta_; }

  friend bool operator==(const GammaPrior&, const GammaPrior&) = default;

 private:
  double alpha_;
  double beta_;
};

/// Gamma posterior after observing x_plus citations over t years.
struct PosteriorParams {
  double alpha_star;
  double beta_star;

  GammaPrior as_prior() const { return GammaPrior(alpha_star, beta_star); }
  friend bool operator==(const PosteriorParams&, const PosteriorParams&) = default;
};

/// Distinct count values with their multiplicities, ascending by value.
struct CountHistogram {
  std::vector<Count> values;
  std::vector<double> weights;

  std::size_t size() const noexcept { return values.size(); }
};

/// Observed citation counts for one journal or field. Summary statistics are
/// computed once on construction.
class CitationSample {
 public:
  CitationSample(std::string label, std::vector<Count> counts);

  const std::string& label() const noexcept { return label_; }
  std::span<const Count> counts() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }

  /// Sum of all counts (x+).
  std::uint64_t total() const noexcept { return total_; }
  Count max() const noexcept { return max_; }
  double mean() const noexcept { return mean_; }
  /// Sample variance, n - 1 denominator (0 for a single observation).
  double variance() const noexcept { return variance_; }
  /// Second central moment with the n denominator.
  double ml_variance() const noexcept { return ml_variance_; }
  const CountHistogram& histogram() const noexcept { return histogram_; }

 private:
  std::string label_;
  std::vector<Count> counts_;
  std::uint64_t total_ = 0;
  Count max_ = 0;
  double mean_ = 0.0;
  double variance_ = 0.0;
  double ml_variance_ = 0.0;
  CountHistogram histogram_;
};

double log_poisson_pmf(Count x, double theta);
/// theta^x e^-theta / x!, evaluated in log space.
double poisson_pmf(Count x, double theta);

double log_gamma_pdf(double theta, const GammaPrior& prior);
double gamma_pdf(double theta, const GammaPrior& prior);

/// Poisson-gamma marginal: Gamma(a+x)/(Gamma(a) x!) (b/(b+1))^a (1/(b+1))^x.
double log_negbin_pmf(Count x, const GammaPrior& prior);
double negbin_pmf(Count x, const GammaPrior& prior);

PosteriorParams posterior_update(const GammaPrior& prior, Count x_plus, double t);

struct Moments {
  double mean;
  double variance;
};

/// Mean a/b and variance a(b+1)/b^2 of the negative binomial marginal.
Moments negbin_moments(const GammaPrior& prior);

}  // namespace bayescite
