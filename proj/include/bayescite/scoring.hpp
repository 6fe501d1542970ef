// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// The Bayesian Impact Score
//
//   F*(x+, t) = (omega beta / alpha) (alpha + x+) / (beta + t)
//
// is the gamma posterior mean (alpha + x+)/(beta + t) normalized so a
// publication with no citations and no history scores omega. The journal's fitted
// negative binomial parameters (alpha, beta) act as the prior.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "bayescite/estimation.hpp"
#include "bayescite/model.hpp"

namespace bayescite {

class ScoreQuery {
 public:
  ScoreQuery(Count x_plus, double t, double omega = 1.0);

  Count x_plus() const noexcept { return x_plus_; }
  double t() const noexcept { return t_; }
  double omega() const noexcept { return omega_; }

 private:
  Count x_plus_;
  double t_;
  double omega_;
};

struct ScoreTable {
  std::string label;
  double omega = 1.0;
  std::vector<double> t_grid;
  std::vector<Count> x_grid;
  /// Row-major: one row per t, one column per x+.
  std::vector<double> values;

  double at(std::size_t t_index, std::size_t x_index) const {
    return values[t_index * x_grid.size() + x_index];
  }
};

struct CredibilityDecomposition {
  double gamma;
  /// (omega beta / alpha) gamma xbar
  double sample_mean_term;
  /// (omega beta / alpha) (1 - gamma) alpha / beta
  double prior_mean_term;
  /// impact_score on the same inputs
  double score;
};

/// Posterior mean (alpha + x+)/(beta + t).
double bayes_estimate(const GammaPrior& prior, Count x_plus, double t);

double impact_score(const GammaPrior& prior, const ScoreQuery& q);

std::vector<double> default_t_grid();
std::vector<Count> default_x_grid();

/// Grids must be nonempty and strictly ascending.
ScoreTable score_table(const GammaPrior& prior, double omega, std::span<const double> t_grid,
                       std::span<const Count> x_grid, std::string label = {});

/// F*(x+ + 1, t) - F*(x+, t) = omega beta / (alpha (beta + t)); constant in x+.
double score_delta_citations(const GammaPrior& prior, double t, double omega = 1.0);

/// F*(x+, t + 2) - F*(x+, t) = -2 omega beta (alpha + x+) / (alpha (beta + t)(beta + t + 2)).
double score_delta_time(const GammaPrior& prior, Count x_plus, double t, double omega = 1.0);

/// gamma(t) = t / (beta + t)
double credibility_weight(double beta, double t);

/// Splits the score into the data and prior parts of the convex combination
/// gamma xbar + (1 - gamma) alpha/beta. For t > 0, sample_mean must equal x+/t;
/// for t = 0 it is ignored and x+ must be 0.
CredibilityDecomposition credibility_decomposition(const GammaPrior& prior, double sample_mean,
                                                   Count x_plus, double t, double omega = 1.0);

/// Same, with xbar derived from the query.
CredibilityDecomposition credibility_decomposition(const GammaPrior& prior, const ScoreQuery& q);

/// The gamma prior a score must be computed under. Throws InputError when the
/// negative binomial fit is unavailable; a Poisson-only fit defines no prior.
GammaPrior scoring_prior(const ModelSelection& selection);

}  // namespace bayescite
