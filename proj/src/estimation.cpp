// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "bayescite/errors.hpp"
#include "bayescite/kernels.hpp"
#include "bayescite/special_functions.hpp"

namespace bayescite {
namespace {

struct NbEval {
  double log_likelihood;
  double g_alpha;
  double g_beta;
  double h_aa;
  double h_ab;
  double h_bb;
};

NbEval evaluate_negbin(const CitationSample& sample, double alpha, double beta,
                       kernels::NbOrder order) {
  const kernels::NbSums sums = kernels::nb_sums(sample.histogram(), alpha, order);
  const double n = static_cast<double>(sample.size());
  const double s = static_cast<double>(sample.total());
  const double log_odds = std::log1p(1.0 / beta);  // -ln(b/(b+1))
  const double bb1 = beta * (beta + 1.0);

  NbEval e{};
  e.log_likelihood = sums.log_terms - n * alpha * log_odds - s * std::log1p(beta);
  if (order >= kernels::NbOrder::kGradient) {
    e.g_alpha = sums.digamma_terms - n * log_odds;
    e.g_beta = n * alpha / bb1 - s / (beta + 1.0);
  }
  if (order >= kernels::NbOrder::kHessian) {
    e.h_aa = sums.trigamma_terms;
    e.h_ab = n / bb1;
    e.h_bb = -n * alpha * (2.0 * beta + 1.0) / (bb1 * bb1) + s / ((beta + 1.0) * (beta + 1.0));
  }
  return e;
}

double gradient_norm(const NbEval& e) { return std::max(std::abs(e.g_alpha), std::abs(e.g_beta)); }

struct Iterate {
  double u;  // ln alpha
  double v;  // ln beta
  NbEval eval;
};

Iterate make_iterate(const CitationSample& sample, double u, double v) {
  return {u, v, evaluate_negbin(sample, std::exp(u), std::exp(v), kernels::NbOrder::kHessian)};
}

bool finite_point(double u, double v) {
  // Keep alpha and beta well inside double range.
  return std::isfinite(u) && std::isfinite(v) && std::abs(u) < 300.0 && std::abs(v) < 300.0;
}

/// Damped Newton on (ln alpha, ln beta). Returns true once the gradient in
/// (alpha, beta) is below tolerance.
bool newton(const CitationSample& sample, Iterate& it, int max_iterations, double tol,
            int& iterations) {
  constexpr double kMaxStep = 2.0;
  while (iterations < max_iterations) {
    const NbEval& e = it.eval;
    if (gradient_norm(e) < tol) return true;

    const double alpha = std::exp(it.u);
    const double beta = std::exp(it.v);
    // Chain rule into log coordinates.
    const double gu = alpha * e.g_alpha;
    const double gv = beta * e.g_beta;
    double huu = alpha * alpha * e.h_aa + gu;
    const double huv = alpha * beta * e.h_ab;
    double hvv = beta * beta * e.h_bb + gv;

    // Levenberg shift until -H is positive definite.
    double shift = 0.0;
    for (int tries = 0; tries < 60; ++tries) {
      const double a = -(huu - shift);
      const double c = -(hvv - shift);
      if (a > 0.0 && c > 0.0 && a * c - huv * huv > 0.0) break;
      shift = shift == 0.0 ? 1e-8 * (std::abs(huu) + std::abs(hvv) + 1.0) : shift * 10.0;
    }
    huu -= shift;
    hvv -= shift;
    const double det = huu * hvv - huv * huv;
    double du = -(hvv * gu - huv * gv) / det;
    double dv = -(huu * gv - huv * gu) / det;
    const double len = std::max(std::abs(du), std::abs(dv));
    if (!std::isfinite(len)) return false;
    if (len > kMaxStep) {
      du *= kMaxStep / len;
      dv *= kMaxStep / len;
    }

    // Backtrack; tolerate roundoff-level decreases so the final quadratic steps
    // can still land.
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(e.log_likelihood) + 1.0);
    bool accepted = false;
    double step = 1.0;
    for (int half = 0; half < 40; ++half, step *= 0.5) {
      const double u = it.u + step * du;
      const double v = it.v + step * dv;
      if (!finite_point(u, v)) continue;
      Iterate next = make_iterate(sample, u, v);
      if (std::isfinite(next.eval.log_likelihood) &&
          next.eval.log_likelihood >= e.log_likelihood - slack) {
        it = next;
        accepted = true;
        break;
      }
    }
    ++iterations;
    if (!accepted) return gradient_norm(it.eval) < tol;
  }
  return gradient_norm(it.eval) < tol;
}

/// Nelder-Mead on -loglik over (ln alpha, ln beta).
std::array<double, 2> nelder_mead(const CitationSample& sample, std::array<double, 2> start) {
  auto f = [&](const std::array<double, 2>& p) {
    if (!finite_point(p[0], p[1])) return std::numeric_limits<double>::infinity();
    const double ll =
        evaluate_negbin(sample, std::exp(p[0]), std::exp(p[1]), kernels::NbOrder::kValue)
            .log_likelihood;
    return std::isfinite(ll) ? -ll : std::numeric_limits<double>::infinity();
  };
  std::array<std::array<double, 2>, 3> x{start, start, start};
  x[1][0] += 0.5;
  x[2][1] += 0.5;
  std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};

  for (int iter = 0; iter < 5000; ++iter) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const auto best = x[order[0]], mid = x[order[1]], worst = x[order[2]];
    const double fbest = fx[order[0]], fmid = fx[order[1]], fworst = fx[order[2]];
    if (std::abs(fworst - fbest) <= 1e-14 * (std::abs(fbest) + 1.0)) break;

    const std::array<double, 2> centroid{(best[0] + mid[0]) / 2, (best[1] + mid[1]) / 2};
    auto along = [&](double t) {
      return std::array<double, 2>{centroid[0] + t * (worst[0] - centroid[0]),
                                   centroid[1] + t * (worst[1] - centroid[1])};
    };
    const auto xr = along(-1.0);
    const double fr = f(xr);
    std::array<double, 2> replacement = xr;
    double freplacement = fr;
    if (fr < fbest) {
      const auto xe = along(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        replacement = xe;
        freplacement = fe;
      }
    } else if (fr >= fmid) {
      const auto xc = fr < fworst ? along(-0.5) : along(0.5);
      const double fc = f(xc);
      if (fc < std::min(fr, fworst)) {
        replacement = xc;
        freplacement = fc;
      } else {
        // shrink toward best
        for (int k : {order[1], order[2]}) {
          x[k] = {best[0] + 0.5 * (x[k][0] - best[0]), best[1] + 0.5 * (x[k][1] - best[1])};
          fx[k] = f(x[k]);
        }
        continue;
      }
    }
    x[order[2]] = replacement;
    fx[order[2]] = freplacement;
  }
  const auto it = std::min_element(fx.begin(), fx.end());
  return x[static_cast<std::size_t>(it - fx.begin())];
}

}  // namespace

const char* to_string(Model m) noexcept { return m == Model::kPoisson ? "Poisson" : "NegBin"; }

double aic(int k, double ell_max) {
  if (k < 1) throw DomainError("aic: parameter count must be at least 1");
  return 2.0 * (static_cast<double>(k) - ell_max);
}

double index_of_dispersion(const CitationSample& sample) {
  if (sample.mean() == 0.0) {
    throw DomainError("index_of_dispersion: sample '" + sample.label() + "' has zero mean");
  }
  return sample.variance() / sample.mean();
}

double poisson_log_likelihood(const CitationSample& sample, double theta) {
  if (!(theta > 0.0)) throw DomainError("poisson_log_likelihood: theta must be positive");
  const CountHistogram& h = sample.histogram();
  double log_factorials = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    log_factorials += h.weights[i] * log_gamma(static_cast<double>(h.values[i]) + 1.0);
  }
  return static_cast<double>(sample.total()) * std::log(theta) -
         static_cast<double>(sample.size()) * theta - log_factorials;
}

double negbin_log_likelihood(const CitationSample& sample, double alpha, double beta) {
  static_cast<void>(GammaPrior(alpha, beta));  // validates
  return evaluate_negbin(sample, alpha, beta, kernels::NbOrder::kValue).log_likelihood;
}

NbGradient negbin_gradient(const CitationSample& sample, double alpha, double beta) {
  static_cast<void>(GammaPrior(alpha, beta));
  const NbEval e = evaluate_negbin(sample, alpha, beta, kernels::NbOrder::kGradient);
  return {e.g_alpha, e.g_beta};
}

MomentEstimate negbin_moment_estimate(double mean, double variance) {
  if (!(mean > 0.0) || !(variance > mean)) {
    throw UnderdispersionError("moment estimate needs variance > mean > 0");
  }
  const double excess = variance - mean;
  return {mean * mean / excess, mean / excess};
}

PoissonFit fit_poisson(const CitationSample& sample) {
  if (sample.total() == 0) {
    throw DegenerateFitError("fit_poisson: sample '" + sample.label() +
                             "' is all zeros; the MLE theta = 0 is on the boundary");
  }
  PoissonFit fit{};
  fit.theta_hat = sample.mean();
  fit.n = sample.size();
  fit.log_likelihood = poisson_log_likelihood(sample, fit.theta_hat);
  fit.aic = aic(1, fit.log_likelihood);
  return fit;
}

NegBinFit fit_negbin(const CitationSample& sample, const NegBinOptions& options) {
  // A finite NB maximum exists exactly when the n-denominator variance exceeds
  // the mean; otherwise the likelihood increases toward the Poisson limit.
  if (!(sample.mean() > 0.0) || !(sample.ml_variance() > sample.mean())) {
    std::ostringstream msg;
    msg << "fit_negbin: sample '" << sample.label() << "' is not overdispersed (mean "
        << sample.mean() << ", variance " << sample.ml_variance() << ")";
    throw UnderdispersionError(msg.str());
  }

  const MomentEstimate start = negbin_moment_estimate(sample.mean(), sample.variance());
  int iterations = 0;
  Iterate it = make_iterate(sample, std::log(start.alpha), std::log(start.beta));
  bool converged = newton(sample, it, options.max_iterations, options.gradient_tolerance,
                          iterations);

  if (!converged) {
    const auto polished = nelder_mead(sample, {std::log(start.alpha), std::log(start.beta)});
    Iterate alt = make_iterate(sample, polished[0], polished[1]);
    int extra = 0;
    const bool alt_converged =
        newton(sample, alt, options.max_iterations, options.gradient_tolerance, extra);
    iterations += extra;
    if (alt_converged || alt.eval.log_likelihood > it.eval.log_likelihood) it = alt;
    converged = alt_converged;
  }

  const double alpha = std::exp(it.u);
  const double beta = std::exp(it.v);
  if (!converged) {
    std::ostringstream msg;
    msg << "fit_negbin: no convergence for sample '" << sample.label() << "' after "
        << iterations << " iterations (gradient norm " << gradient_norm(it.eval) << ")";
    throw NonConvergenceError(msg.str(), alpha, beta, it.eval.log_likelihood,
                              gradient_norm(it.eval));
  }

  NegBinFit fit{};
  fit.alpha_hat = alpha;
  fit.beta_hat = beta;
  fit.log_likelihood = it.eval.log_likelihood;
  fit.aic = aic(2, fit.log_likelihood);
  fit.n = sample.size();
  fit.converged = true;
  fit.iterations = iterations;
  return fit;
}

ModelSelection select_model(const CitationSample& sample, const NegBinOptions& options) {
  ModelSelection sel{fit_poisson(sample), std::nullopt, {}, Model::kPoisson};
  try {
    sel.negbin = fit_negbin(sample, options);
  } catch (const UnderdispersionError& e) {
    sel.negbin_unavailable_reason = e.what();
    return sel;
  }
  if (sel.negbin->aic < sel.poisson.aic) sel.winner = Model::kNegBin;
  return sel;
}

}  // namespace bayescite
