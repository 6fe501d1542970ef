// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// File formats shared by the CLI and the synthetic generators.
//
//   counts:   journal_id,count                        one observation per row
//   articles: article_id,journal_id,pub_year,citations,fcr   (fcr may be empty)
//   fits:     journal_id,theta_hat,poisson_aic,alpha_hat,beta_hat,negbin_aic,winner,
//             n,poisson_loglik,negbin_loglik,converged,iterations
//
// UTF-8, comma separated, '.' decimal point, lines starting with '#' ignored.
// Fits are also accepted as the JSON document written by write_fits_json.

#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bayescite/analytics.hpp"
#include "bayescite/estimation.hpp"
#include "bayescite/model.hpp"

namespace bayescite::io {

inline constexpr std::string_view kCountsHeader = "journal_id,count";
inline constexpr std::string_view kArticlesHeader =
    "article_id,journal_id,pub_year,citations,fcr";
inline constexpr std::string_view kFitsHeader =
    "journal_id,theta_hat,poisson_aic,alpha_hat,beta_hat,negbin_aic,winner,n,"
    "poisson_loglik,negbin_loglik,converged,iterations";

/// Quotes a field when it contains a comma, a quote or leading/trailing blanks.
std::string csv_field(std::string_view field);

/// Splits one CSV line; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

/// One CitationSample per journal, ordered by journal_id. Observation order within
/// a journal follows the file.
std::vector<CitationSample> read_counts(std::istream& in);
std::vector<CitationSample> read_counts_file(const std::string& path);

void write_counts(std::ostream& out, const std::vector<CitationSample>& samples,
                  const std::vector<std::string>& comments = {});

/// One journal's row of the fit report.
struct FitRecord {
  std::string journal_id;
  PoissonFit poisson;
  std::optional<NegBinFit> negbin;
  Model winner;
};

FitRecord to_record(const std::string& journal_id, const ModelSelection& selection);

void write_fits_csv(std::ostream& out, const std::vector<FitRecord>& fits);
void write_fits_json(std::ostream& out, const std::vector<FitRecord>& fits);

/// Accepts either format; JSON is detected by a leading '{'. A CSV may omit every
/// column except journal_id, alpha_hat and beta_hat.
std::vector<FitRecord> read_fits(std::istream& in);
std::vector<FitRecord> read_fits_file(const std::string& path);

/// journal_id -> NB fit for every record that has one.
std::map<std::string, NegBinFit> negbin_fits(const std::vector<FitRecord>& fits);

/// pub_year is checked against [1900, reference_year] when a reference year is given.
std::vector<ArticleRecord> read_articles(std::istream& in,
                                         std::optional<int> reference_year = std::nullopt);
std::vector<ArticleRecord> read_articles_file(const std::string& path,
                                              std::optional<int> reference_year = std::nullopt);

/// Two decimals; the exact binary value is rounded to nearest, ties to even.
std::string format_2dp(double v);
/// Shortest decimal form that reads back to the same double.
std::string format_full(double v);

}  // namespace bayescite::io
