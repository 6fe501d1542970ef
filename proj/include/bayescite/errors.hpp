// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bayescite {

/// Argument outside the mathematical domain of a function (theta <= 0, x <= 0 for
/// log_gamma, negative counts, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent caller input: empty samples, length mismatches,
/// unparseable files, unknown journals.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Maximum-likelihood estimate sits on the parameter boundary (all-zero sample).
class DegenerateFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variance does not exceed the mean, so the negative binomial MLE runs off to the
/// Poisson limit.
class UnderdispersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optimizer hit its iteration cap. Carries the best iterate seen.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double best_alpha, double best_beta,
                      double best_log_likelihood, double gradient_norm)
      : std::runtime_error(what),
        best_alpha_(best_alpha),
        best_beta_(best_beta),
        best_log_likelihood_(best_log_likelihood),
        gradient_norm_(gradient_norm) {}

  double best_alpha() const noexcept { return best_alpha_; }
  double best_beta() const noexcept { return best_beta_; }
  double best_log_likelihood() const noexcept { return best_log_likelihood_; }
  double gradient_norm() const noexcept { return gradient_norm_; }

 private:
  double best_alpha_;
  double best_beta_;
  double best_log_likelihood_;
  double gradient_norm_;
};

}  // namespace bayescite
