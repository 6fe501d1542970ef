// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bayescite/errors.hpp"
#include "bayescite/special_functions.hpp"

namespace bayescite {
namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

GammaPrior::GammaPrior(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!positive_finite(alpha) || !positive_finite(beta)) {
    throw DomainError("GammaPrior: alpha and beta must be positive, got alpha=" +
                      std::to_string(alpha) + " beta=" + std::to_string(beta));
  }
}

CitationSample::CitationSample(std::string label, std::vector<Count> counts)
    : label_(std::move(label)), counts_(std::move(counts)) {
  if (counts_.empty()) throw InputError("CitationSample '" + label_ + "': no observations");

  std::map<Count, double> freq;
  for (Count c : counts_) {
    if (c < 0) {
      throw DomainError("CitationSample '" + label_ + "': negative count " + std::to_string(c));
    }
    total_ += static_cast<std::uint64_t>(c);
    max_ = std::max(max_, c);
    freq[c] += 1.0;
  }
  const double n = static_cast<double>(counts_.size());
  mean_ = static_cast<double>(total_) / n;

  // Two-pass over the histogram keeps the sum of squares well conditioned.
  double ss = 0.0;
  histogram_.values.reserve(freq.size());
  histogram_.weights.reserve(freq.size());
  for (const auto& [value, weight] : freq) {
    const double d = static_cast<double>(value) - mean_;
    ss += weight * d * d;
    histogram_.values.push_back(value);
    histogram_.weights.push_back(weight);
  }
  ml_variance_ = ss / n;
  variance_ = counts_.size() > 1 ? ss / (n - 1.0) : 0.0;
}

double log_poisson_pmf(Count x, double theta) {
  if (!positive_finite(theta)) {
    throw DomainError("poisson_pmf: theta must be positive, got " + std::to_string(theta));
  }
  if (x < 0) throw DomainError("poisson_pmf: negative count");
  const double xd = static_cast<double>(x);
  return xd * std::log(theta) - theta - log_gamma(xd + 1.0);
}

double poisson_pmf(Count x, double theta) { return std::exp(log_poisson_pmf(x, theta)); }

double log_gamma_pdf(double theta, const GammaPrior& prior) {
  if (!positive_finite(theta)) {
    throw DomainError("gamma_pdf: theta must be positive, got " + std::to_string(theta));
  }
  const double a = prior.alpha();
  const double b = prior.beta();
  return a * std::log(b) + (a - 1.0) * std::log(theta) - b * theta - log_gamma(a);
}

double gamma_pdf(double theta, const GammaPrior& prior) {
  return std::exp(log_gamma_pdf(theta, prior));
}

double log_negbin_pmf(Count x, const GammaPrior& prior) {
  if (x < 0) throw DomainError("negbin_pmf: negative count");
  const double a = prior.alpha();
  const double b = prior.beta();
  const double xd = static_cast<double>(x);
  // ln(b/(b+1)) = -log1p(1/b); ln(1/(b+1)) = -log1p(b)
  return log_gamma(a + xd) - log_gamma(a) - log_gamma(xd + 1.0) - a * std::log1p(1.0 / b) -
         xd * std::log1p(b);
}

double negbin_pmf(Count x, const GammaPrior& prior) {
  return std::exp(log_negbin_pmf(x, prior));
}

PosteriorParams posterior_update(const GammaPrior& prior, Count x_plus, double t) {
  if (x_plus < 0) throw DomainError("posterior_update: x_plus must be nonnegative");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("posterior_update: t must be nonnegative, got " + std::to_string(t));
  }
  return {prior.alpha() + static_cast<double>(x_plus), prior.beta() + t};
}

Moments negbin_moments(const GammaPrior& prior) {
  const double a = prior.alpha();
  const double b = prior.beta();
  return {a / b, a * (b + 1.0) / (b * b)};
}

}  // namespace bayescite
