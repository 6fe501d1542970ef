// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/elasticity.hpp"

#include <cmath>

#include "bayescite/errors.hpp"

namespace bayescite {

const char* to_string(ElasticityAxis axis) noexcept {
  return axis == ElasticityAxis::kCitations ? "citations" : "time";
}

double citation_elasticity(double alpha, Count x_plus) {
  if (!(alpha > 0.0)) throw DomainError("citation_elasticity: alpha must be positive");
  if (x_plus < 0) throw DomainError("citation_elasticity: x_plus must be nonnegative");
  const double x = static_cast<double>(x_plus);
  return x / (alpha + x);
}

double time_elasticity(double beta, double t) {
  if (!(beta > 0.0)) throw DomainError("time_elasticity: beta must be positive");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time_elasticity: t must be >= 0");
  return -t / (beta + t + 2.0);
}

std::vector<ElasticityCurve> elasticity_curves(std::span<const LabelledFit> fits,
                                               std::span<const Count> x_grid,
                                               std::span<const double> t_grid) {
  if (fits.empty() || x_grid.empty() || t_grid.empty()) {
    throw InputError("elasticity_curves: fits and grids must be nonempty");
  }
  std::vector<ElasticityCurve> curves;
  curves.reserve(2 * fits.size());
  for (const LabelledFit& f : fits) {
    ElasticityCurve cites{f.label, ElasticityAxis::kCitations, {}, {}};
    for (Count x : x_grid) {
      cites.grid.push_back(static_cast<double>(x));
      cites.elasticities.push_back(citation_elasticity(f.fit.alpha_hat, x));
    }
    ElasticityCurve time{f.label, ElasticityAxis::kTime, {}, {}};
    for (double t : t_grid) {
      time.grid.push_back(t);
      time.elasticities.push_back(time_elasticity(f.fit.beta_hat, t));
    }
    curves.push_back(std::move(cites));
    curves.push_back(std::move(time));
  }
  return curves;
}

}  // namespace bayescite
