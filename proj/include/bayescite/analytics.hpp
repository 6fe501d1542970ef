// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bayescite/estimation.hpp"
#include "bayescite/model.hpp"

namespace bayescite {

struct ArticleRecord {
  std::string article_id;
  std::string journal_id;
  int pub_year;
  Count citations;
  std::optional<double> fcr;
};

/// Summary statistics with sample (n - 1) SD, bias-adjusted skewness
///   G1 = g1 sqrt(n (n-1)) / (n - 2)
/// and bias-adjusted excess kurtosis
///   G2 = ((n + 1) g2 + 6) (n - 1) / ((n - 2)(n - 3)),
/// where g1 = m3 / m2^1.5 and g2 = m4 / m2^2 - 3 use central moments with the n
/// denominator. Fields that are undefined for the data are left empty: cv when
/// the mean is 0, skewness below 3 values or at zero variance, kurtosis below 4
/// values or at zero variance.
struct DescriptiveStats {
  std::size_t n;
  double mean;
  double se;
  double median;
  double sd;
  std::optional<double> cv;
  std::optional<double> kurtosis;
  std::optional<double> skewness;
  double min;
  double max;
};

DescriptiveStats describe(std::span<const double> values);

/// Product-moment correlation. Throws InputError on length mismatch, fewer than
/// two pairs, or a constant argument.
double pearson(std::span<const double> x, std::span<const double> y);

struct JournalComparison {
  std::string journal_id;
  std::size_t articles;
  /// Empty when no article of the journal carries an FCR value.
  std::optional<DescriptiveStats> fcr;
  DescriptiveStats score;
};

struct ComparisonReport {
  double omega;
  int reference_year;
  /// Ordered by journal_id.
  std::vector<JournalComparison> journals;
  /// Per-article Bayesian scores, aligned with the input articles.
  std::vector<double> article_scores;
  /// Over articles carrying an FCR; empty with a notice otherwise.
  std::optional<double> pearson_r;
  std::size_t paired_articles = 0;
  std::string notice;
  /// Journal ids ordered by descending CV (journals without a CV omitted).
  std::vector<std::string> cv_ranking_fcr;
  std::vector<std::string> cv_ranking_score;
};

/// Scores every article at t = reference_year - pub_year under its journal's
/// fitted prior and summarizes both metrics per journal.
ComparisonReport compare_fcr(std::span<const ArticleRecord> articles,
                             const std::map<std::string, NegBinFit>& fits, int reference_year,
                             double omega = 1.0);

struct PmfSeries {
  std::vector<Count> x;
  std::vector<double> empirical;
  std::vector<double> poisson;
  std::vector<double> negbin;
};

/// Empirical relative frequencies against both fitted pmfs over 0..x_max.
PmfSeries fitted_pmf_series(const CitationSample& sample, const PoissonFit& poisson,
                            const NegBinFit& negbin, Count x_max);

/// Half the L1 distance between two aligned probability series.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace bayescite
