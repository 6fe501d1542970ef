// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "bayescite/errors.hpp"
#include "bayescite/kernels.hpp"

namespace bayescite {
namespace {

void require_nonnegative_t(double t, const char* fn) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(fn) + ": t must be nonnegative and finite");
  }
}

void require_positive_omega(double omega, const char* fn) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError(std::string(fn) + ": omega must be positive and finite");
  }
}

template <typename T>
void require_ascending(std::span<const T> grid, const char* what) {
  if (grid.empty()) throw InputError(std::string("score_table: empty ") + what);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) {
      throw InputError(std::string("score_table: ") + what + " must be strictly ascending");
    }
  }
}

}  // namespace

ScoreQuery::ScoreQuery(Count x_plus, double t, double omega)
    : x_plus_(x_plus), t_(t), omega_(omega) {
  if (x_plus < 0) throw DomainError("ScoreQuery: x_plus must be nonnegative");
  require_nonnegative_t(t, "ScoreQuery");
  require_positive_omega(omega, "ScoreQuery");
}

double bayes_estimate(const GammaPrior& prior, Count x_plus, double t) {
  if (x_plus < 0) throw DomainError("bayes_estimate: x_plus must be nonnegative");
  require_nonnegative_t(t, "bayes_estimate");
  return (prior.alpha() + static_cast<double>(x_plus)) / (prior.beta() + t);
}

double impact_score(const GammaPrior& prior, const ScoreQuery& q) {
  const double a = prior.alpha();
  const double b = prior.beta();
  // Grouped so (0, 0) gives (b a)/(a b) = 1 exactly before scaling by omega.
  const double ratio = (b * (a + static_cast<double>(q.x_plus()))) / (a * (b + q.t()));
  return q.omega() * ratio;
}

std::vector<double> default_t_grid() { return {2.0, 4.0, 6.0, 8.0}; }

std::vector<Count> default_x_grid() {
  std::vector<Count> grid;
  for (Count x = 0; x <= 100; x += 10) grid.push_back(x);
  return grid;
}

ScoreTable score_table(const GammaPrior& prior, double omega, std::span<const double> t_grid,
                       std::span<const Count> x_grid, std::string label) {
  require_positive_omega(omega, "score_table");
  require_ascending(t_grid, "t grid");
  require_ascending(x_grid, "x grid");
  if (t_grid.front() < 0.0) throw DomainError("score_table: negative t in grid");
  if (x_grid.front() < 0) throw DomainError("score_table: negative x+ in grid");

  ScoreTable table;
  table.label = std::move(label);
  table.omega = omega;
  table.t_grid.assign(t_grid.begin(), t_grid.end());
  table.x_grid.assign(x_grid.begin(), x_grid.end());
  table.values = kernels::score_grid(prior, omega, t_grid, x_grid);
  return table;
}

double score_delta_citations(const GammaPrior& prior, double t, double omega) {
  require_nonnegative_t(t, "score_delta_citations");
  require_positive_omega(omega, "score_delta_citations");
  return omega * prior.beta() / (prior.alpha() * (prior.beta() + t));
}

double score_delta_time(const GammaPrior& prior, Count x_plus, double t, double omega) {
  if (x_plus < 0) throw DomainError("score_delta_time: x_plus must be nonnegative");
  require_nonnegative_t(t, "score_delta_time");
  require_positive_omega(omega, "score_delta_time");
  const double a = prior.alpha();
  const double b = prior.beta();
  return -2.0 * omega * b * (a + static_cast<double>(x_plus)) / (a * (b + t) * (b + t + 2.0));
}

double credibility_weight(double beta, double t) {
  if (!(beta > 0.0)) throw DomainError("credibility_weight: beta must be positive");
  require_nonnegative_t(t, "credibility_weight");
  return t / (beta + t);
}

CredibilityDecomposition credibility_decomposition(const GammaPrior& prior, double sample_mean,
                                                   Count x_plus, double t, double omega) {
  const ScoreQuery q(x_plus, t, omega);
  const double a = prior.alpha();
  const double b = prior.beta();
  const double scale = omega * b / a;

  CredibilityDecomposition d{};
  d.score = impact_score(prior, q);
  if (t == 0.0) {
    if (x_plus != 0) {
      throw InputError(
          "credibility_decomposition: t = 0 with x+ > 0 has no sample mean to weight");
    }
    d.gamma = 0.0;
    d.sample_mean_term = 0.0;
    d.prior_mean_term = scale * prior.mean();
    return d;
  }

  const double xbar = static_cast<double>(x_plus) / t;
  if (!(std::abs(sample_mean - xbar) <= 1e-12 * std::max(1.0, xbar))) {
    throw InputError("credibility_decomposition: sample mean " + std::to_string(sample_mean) +
                     " is inconsistent with x+ / t = " + std::to_string(xbar));
  }
  d.gamma = credibility_weight(b, t);
  // 1 - gamma written as b / (b + t): subtracting from one loses digits once
  // gamma is close to one.
  d.sample_mean_term = scale * d.gamma * xbar;
  d.prior_mean_term = scale * (b / (b + t)) * prior.mean();
  return d;
}

CredibilityDecomposition credibility_decomposition(const GammaPrior& prior, const ScoreQuery& q) {
  const double xbar = q.t() > 0.0 ? static_cast<double>(q.x_plus()) / q.t() : 0.0;
  return credibility_decomposition(prior, xbar, q.x_plus(), q.t(), q.omega());
}

GammaPrior scoring_prior(const ModelSelection& selection) {
  if (!selection.negbin) {
    throw InputError("scoring needs a negative binomial fit; none is available (" +
                     selection.negbin_unavailable_reason + ")");
  }
  return selection.negbin->prior();
}

}  // namespace bayescite
