// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// Elasticities of the impact score, defined with discrete steps (one citation,
// two years) so the closed forms below are exact.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "bayescite/estimation.hpp"
#include "bayescite/model.hpp"

namespace bayescite {

enum class ElasticityAxis { kCitations, kTime };

const char* to_string(ElasticityAxis axis) noexcept;

struct ElasticityCurve {
  std::string label;
  ElasticityAxis axis;
  std::vector<double> grid;
  std::vector<double> elasticities;
};

/// x+ / (alpha + x+), in [0, 1).
double citation_elasticity(double alpha, Count x_plus);

/// -t / (beta + t + 2), in (-1, 0].
double time_elasticity(double beta, double t);

struct LabelledFit {
  std::string label;
  NegBinFit fit;
};

/// One citation curve over x_grid and one time curve over t_grid per fit, in
/// input order (citation curve first).
std::vector<ElasticityCurve> elasticity_curves(std::span<const LabelledFit> fits,
                                               std::span<const Count> x_grid,
                                               std::span<const double> t_grid);

}  // namespace bayescite
