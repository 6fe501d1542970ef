// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bayescite/errors.hpp"

namespace bayescite {
namespace {

constexpr double kStirlingThreshold = 10.0;
constexpr double kPsiThreshold = 10.0;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

// Stirling series for z >= 10; the first omitted term is below 1e-18 there.
double stirling_log_gamma(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 +
             inv2 * (-1.0 / 360.0 +
                     inv2 * (1.0 / 1260.0 +
                             inv2 * (-1.0 / 1680.0 +
                                     inv2 * (1.0 / 1188.0 +
                                             inv2 * (-691.0 / 360360.0 +
                                                     inv2 * (1.0 / 156.0 +
                                                             inv2 * (-3617.0 / 122400.0))))))));
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

// (n-1)! for n = 1..21, all exactly representable.
constexpr std::array<double, 21> kFactorials = [] {
  std::array<double, 21> f{};
  double acc = 1.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = acc;
    acc *= static_cast<double>(i + 1);
  }
  return f;
}();

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  // Integer arguments (the ln x! of every pmf) come from an exact table.
  if (x <= static_cast<double>(kFactorials.size()) && x == std::floor(x)) {
    return std::log(kFactorials[static_cast<std::size_t>(x) - 1]);
  }
  if (x >= kStirlingThreshold) return stirling_log_gamma(x);

  // ln Gamma(x) = ln Gamma(x + n) - ln(x (x+1) ... (x+n-1)); the product stays
  // far from overflow because x + n < 20.
  double z = x;
  double product = 1.0;
  while (z < kStirlingThreshold) {
    product *= z;
    z += 1.0;
  }
  return stirling_log_gamma(z) - std::log(product);
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  double z = x;
  while (z <= kPsiThreshold) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  const double tail =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 - inv2 * (1.0 / 12.0)))))));
  return std::log(z) - 0.5 * inv - tail - shift;
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double shift = 0.0;
  double z = x;
  while (z <= kPsiThreshold) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  const double tail =
      inv * (1.0 +
             inv * (0.5 +
                    inv * (1.0 / 6.0 +
                           inv2 * (-1.0 / 30.0 +
                                   inv2 * (1.0 / 42.0 +
                                           inv2 * (-1.0 / 30.0 +
                                                   inv2 * (5.0 / 66.0 +
                                                           inv2 * (-691.0 / 2730.0 +
                                                                   inv2 * (7.0 / 6.0)))))))));
  return tail + shift;
}

}  // namespace bayescite
