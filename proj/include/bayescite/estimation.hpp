// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "bayescite/model.hpp"

namespace bayescite {

struct PoissonFit {
  double theta_hat;
  double log_likelihood;
  double aic;
  std::size_t n;
};

struct NegBinFit {
  double alpha_hat;
  double beta_hat;
  double log_likelihood;
  double aic;
  std::size_t n;
  bool converged;
  int iterations;

  GammaPrior prior() const { return GammaPrior(alpha_hat, beta_hat); }
};

enum class Model { kPoisson, kNegBin };

const char* to_string(Model m) noexcept;

struct ModelSelection {
  PoissonFit poisson;
  /// Empty when the sample is not overdispersed.
  std::optional<NegBinFit> negbin;
  std::string negbin_unavailable_reason;
  /// NB wins only on a strictly smaller AIC.
  Model winner;
};

struct NegBinOptions {
  int max_iterations = 500;
  /// Infinity norm of (dl/dalpha, dl/dbeta) at which Newton stops.
  double gradient_tolerance = 1e-8;
};

struct NbGradient {
  double d_alpha;
  double d_beta;
};

/// 2 (k - ell_max)
double aic(int k, double ell_max);

/// var / mean with the n - 1 variance.
double index_of_dispersion(const CitationSample& sample);

double poisson_log_likelihood(const CitationSample& sample, double theta);
double negbin_log_likelihood(const CitationSample& sample, double alpha, double beta);
/// Closed-form score vector of the NB log-likelihood (digamma in alpha).
NbGradient negbin_gradient(const CitationSample& sample, double alpha, double beta);

struct MomentEstimate {
  double alpha;
  double beta;
};

/// alpha0 = m^2 / (v - m), beta0 = m / (v - m). Requires v > m > 0.
MomentEstimate negbin_moment_estimate(double mean, double variance);

PoissonFit fit_poisson(const CitationSample& sample);
NegBinFit fit_negbin(const CitationSample& sample, const NegBinOptions& options = {});
ModelSelection select_model(const CitationSample& sample, const NegBinOptions& options = {});

}  // namespace bayescite
