// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// Data-parallel inner loops. Every kernel has an OpenMP version (used by the
// library) and a plain serial version under kernels::serial kept as the reference
// the tests compare against.
//
// All OpenMP kernels produce results that do not depend on the thread count:
// element-wise kernels are trivially so, and reductions sum fixed-size blocks in
// a fixed order.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bayescite/model.hpp"

namespace bayescite::kernels {

/// Reduction block length for deterministic parallel sums.
inline constexpr std::size_t kReductionBlock = 256;

/// Histogram-weighted sums over count values k that carry the alpha-dependence of
/// the negative binomial log-likelihood:
///   log_terms      = sum w_k [lnG(a+k) - lnG(a) - lnG(k+1)]
///   digamma_terms  = sum w_k [psi(a+k) - psi(a)]
///   trigamma_terms = sum w_k [psi'(a+k) - psi'(a)]
struct NbSums {
  double log_terms = 0.0;
  double digamma_terms = 0.0;
  double trigamma_terms = 0.0;
};

enum class NbOrder { kValue, kGradient, kHessian };

NbSums nb_sums(const CountHistogram& hist, double alpha, NbOrder order);

/// values[i * x_grid.size() + j] = impact score at (x_grid[j], t_grid[i]).
std::vector<double> score_grid(const GammaPrior& prior, double omega,
                               std::span<const double> t_grid, std::span<const Count> x_grid);

struct ScoreInput {
  double alpha;
  double beta;
  Count x_plus;
  double t;
};

std::vector<double> score_batch(std::span<const ScoreInput> inputs, double omega);

/// n draws from the two-stage gamma -> Poisson mixture; draw i uses its own
/// stream keyed by (seed, i).
std::vector<Count> draw_negbin(const GammaPrior& prior, std::size_t n, std::uint64_t seed);
std::vector<Count> draw_poisson(double theta, std::size_t n, std::uint64_t seed);

namespace serial {

NbSums nb_sums(const CountHistogram& hist, double alpha, NbOrder order);
std::vector<double> score_grid(const GammaPrior& prior, double omega,
                               std::span<const double> t_grid, std::span<const Count> x_grid);
std::vector<double> score_batch(std::span<const ScoreInput> inputs, double omega);
std::vector<Count> draw_negbin(const GammaPrior& prior, std::size_t n, std::uint64_t seed);
std::vector<Count> draw_poisson(double theta, std::size_t n, std::uint64_t seed);

}  // namespace serial

}  // namespace bayescite::kernels
