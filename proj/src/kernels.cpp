// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "bayescite/errors.hpp"
#include "bayescite/scoring.hpp"
#include "bayescite/special_functions.hpp"
#include "bayescite/synthetic.hpp"

namespace bayescite::kernels {
namespace {

// Below these sizes the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelMinBins = 4 * kReductionBlock;
constexpr std::size_t kParallelMinCells = 4096;
constexpr std::size_t kParallelMinDraws = 2048;

// Below this count the alpha-differences are summed term by term. Differencing
// lgamma/digamma values loses everything when alpha is large (near-Poisson
// samples), while the explicit sums stay exact to rounding.
constexpr Count kDirectSumLimit = 64;

struct AlphaBase {
  double log_alpha;
  double log_gamma;
  double digamma;
  double trigamma;
};

AlphaBase alpha_base(double alpha, NbOrder order) {
  return {std::log(alpha), log_gamma(alpha),
          order >= NbOrder::kGradient ? digamma(alpha) : 0.0,
          order >= NbOrder::kHessian ? trigamma(alpha) : 0.0};
}

inline void accumulate_bin(NbSums& acc, Count value, double weight, double alpha,
                           const AlphaBase& base, NbOrder order) {
  if (value == 0) return;  // every term vanishes at k = 0
  const double k = static_cast<double>(value);
  const double log_k_factorial = log_gamma(k + 1.0);

  if (value <= kDirectSumLimit) {
    // lnG(a+k) - lnG(a) = k ln a + sum_j log1p(j/a); psi and psi' differences
    // telescope to sums of 1/(a+j) and -1/(a+j)^2.
    double log_part = 0.0, inv = 0.0, inv2 = 0.0;
    for (Count j = 0; j < value; ++j) {
      const double jd = static_cast<double>(j);
      log_part += std::log1p(jd / alpha);
      const double r = 1.0 / (alpha + jd);
      inv += r;
      inv2 += r * r;
    }
    acc.log_terms += weight * (k * base.log_alpha + log_part - log_k_factorial);
    if (order >= NbOrder::kGradient) acc.digamma_terms += weight * inv;
    if (order >= NbOrder::kHessian) acc.trigamma_terms -= weight * inv2;
    return;
  }

  const double ak = alpha + k;
  acc.log_terms += weight * (log_gamma(ak) - base.log_gamma - log_k_factorial);
  if (order >= NbOrder::kGradient) acc.digamma_terms += weight * (digamma(ak) - base.digamma);
  if (order >= NbOrder::kHessian) acc.trigamma_terms += weight * (trigamma(ak) - base.trigamma);
}

double score_cell(double alpha, double beta, Count x_plus, double t, double omega) {
  return impact_score(GammaPrior(alpha, beta), ScoreQuery(x_plus, t, omega));
}

template <typename Draw>
std::vector<Count> draw_parallel(std::size_t n, std::uint64_t seed, Draw draw) {
  std::vector<Count> out(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelMinDraws)
  for (std::int64_t i = 0; i < count; ++i) {
    auto rng = Xoshiro256::for_stream(seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = draw(rng);
  }
  return out;
}

template <typename Draw>
std::vector<Count> draw_serial(std::size_t n, std::uint64_t seed, Draw draw) {
  std::vector<Count> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = Xoshiro256::for_stream(seed, i);
    out[i] = draw(rng);
  }
  return out;
}

void check_draw_params(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("draw_poisson: theta must be positive");
  }
}

}  // namespace

NbSums nb_sums(const CountHistogram& hist, double alpha, NbOrder order) {
  const AlphaBase base = alpha_base(alpha, order);
  const std::size_t bins = hist.size();
  const std::size_t blocks = (bins + kReductionBlock - 1) / kReductionBlock;
  std::vector<NbSums> partial(blocks);

  const auto block_count = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static) if (bins >= kParallelMinBins)
  for (std::int64_t b = 0; b < block_count; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(begin + kReductionBlock, bins);
    NbSums acc;
    for (std::size_t i = begin; i < end; ++i) {
      accumulate_bin(acc, hist.values[i], hist.weights[i], alpha, base, order);
    }
    partial[static_cast<std::size_t>(b)] = acc;
  }

  NbSums total;
  for (const NbSums& p : partial) {
    total.log_terms += p.log_terms;
    total.digamma_terms += p.digamma_terms;
    total.trigamma_terms += p.trigamma_terms;
  }
  return total;
}

std::vector<double> score_grid(const GammaPrior& prior, double omega,
                               std::span<const double> t_grid, std::span<const Count> x_grid) {
  const std::size_t rows = t_grid.size();
  const std::size_t cols = x_grid.size();
  std::vector<double> values(rows * cols);
  const auto cells = static_cast<std::int64_t>(rows * cols);
  const double a = prior.alpha();
  const double b = prior.beta();
#pragma omp parallel for schedule(static) if (values.size() >= kParallelMinCells)
  for (std::int64_t c = 0; c < cells; ++c) {
    const auto idx = static_cast<std::size_t>(c);
    values[idx] = score_cell(a, b, x_grid[idx % cols], t_grid[idx / cols], omega);
  }
  return values;
}

std::vector<double> score_batch(std::span<const ScoreInput> inputs, double omega) {
  std::vector<double> out(inputs.size());
  const auto count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(static) if (inputs.size() >= kParallelMinCells)
  for (std::int64_t i = 0; i < count; ++i) {
    const ScoreInput& in = inputs[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = score_cell(in.alpha, in.beta, in.x_plus, in.t, omega);
  }
  return out;
}

std::vector<Count> draw_negbin(const GammaPrior& prior, std::size_t n, std::uint64_t seed) {
  const double a = prior.alpha();
  const double b = prior.beta();
  return draw_parallel(n, seed, [a, b](Xoshiro256& rng) {
    return poisson_variate(rng, gamma_variate(rng, a, b));
  });
}

std::vector<Count> draw_poisson(double theta, std::size_t n, std::uint64_t seed) {
  check_draw_params(theta);
  return draw_parallel(n, seed, [theta](Xoshiro256& rng) { return poisson_variate(rng, theta); });
}

namespace serial {

NbSums nb_sums(const CountHistogram& hist, double alpha, NbOrder order) {
  const AlphaBase base = alpha_base(alpha, order);
  NbSums acc;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    accumulate_bin(acc, hist.values[i], hist.weights[i], alpha, base, order);
  }
  return acc;
}

std::vector<double> score_grid(const GammaPrior& prior, double omega,
                               std::span<const double> t_grid, std::span<const Count> x_grid) {
  std::vector<double> values;
  values.reserve(t_grid.size() * x_grid.size());
  for (double t : t_grid) {
    for (Count x : x_grid) values.push_back(score_cell(prior.alpha(), prior.beta(), x, t, omega));
  }
  return values;
}

std::vector<double> score_batch(std::span<const ScoreInput> inputs, double omega) {
  std::vector<double> out;
  out.reserve(inputs.size());
  for (const ScoreInput& in : inputs) {
    out.push_back(score_cell(in.alpha, in.beta, in.x_plus, in.t, omega));
  }
  return out;
}

std::vector<Count> draw_negbin(const GammaPrior& prior, std::size_t n, std::uint64_t seed) {
  const double a = prior.alpha();
  const double b = prior.beta();
  return draw_serial(n, seed, [a, b](Xoshiro256& rng) {
    return poisson_variate(rng, gamma_variate(rng, a, b));
  });
}

std::vector<Count> draw_poisson(double theta, std::size_t n, std::uint64_t seed) {
  check_draw_params(theta);
  return draw_serial(n, seed, [theta](Xoshiro256& rng) { return poisson_variate(rng, theta); });
}

}  // namespace serial
}  // namespace bayescite::kernels
