// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bayescite/errors.hpp"
#include "bayescite/kernels.hpp"

namespace bayescite {
namespace {

std::vector<std::string> cv_ranking(const std::vector<JournalComparison>& journals,
                                    bool use_fcr) {
  std::vector<std::pair<double, std::string>> keyed;
  for (const JournalComparison& j : journals) {
    const std::optional<DescriptiveStats>& stats =
        use_fcr ? j.fcr : std::optional<DescriptiveStats>(j.score);
    if (stats && stats->cv) keyed.emplace_back(*stats->cv, j.journal_id);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  std::vector<std::string> ids;
  ids.reserve(keyed.size());
  for (auto& [cv, id] : keyed) ids.push_back(std::move(id));
  return ids;
}

}  // namespace

DescriptiveStats describe(std::span<const double> values) {
  if (values.empty()) throw InputError("describe: no values");
  const std::size_t count = values.size();
  const double n = static_cast<double>(count);

  DescriptiveStats s{};
  s.n = count;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double ss = m2;
  m2 /= n;
  m3 /= n;
  m4 /= n;

  s.sd = count > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  s.se = s.sd / std::sqrt(n);
  if (s.mean != 0.0) s.cv = s.sd / s.mean;
  if (m2 > 0.0) {
    if (count >= 3) {
      const double g1 = m3 / std::pow(m2, 1.5);
      s.skewness = g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
    }
    if (count >= 4) {
      const double g2 = m4 / (m2 * m2) - 3.0;
      s.kurtosis = ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0));
    }
  }

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t mid = count / 2;
  s.median = count % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return s;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InputError("pearson: length mismatch (" + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw InputError("pearson: need at least two pairs");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw InputError("pearson: zero variance");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

ComparisonReport compare_fcr(std::span<const ArticleRecord> articles,
                             const std::map<std::string, NegBinFit>& fits, int reference_year,
                             double omega) {
  if (!(omega > 0.0)) throw DomainError("compare_fcr: omega must be positive");

  if (articles.empty()) throw InputError("compare_fcr: no articles");

  std::map<std::string, std::size_t> missing;  // journal -> articles referencing it
  for (const ArticleRecord& a : articles) {
    if (!fits.contains(a.journal_id)) ++missing[a.journal_id];
    if (a.pub_year > reference_year) {
      throw InputError("compare_fcr: article '" + a.article_id + "' published in " +
                       std::to_string(a.pub_year) + ", after reference year " +
                       std::to_string(reference_year));
    }
    if (a.citations < 0) throw InputError("compare_fcr: negative citations for " + a.article_id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& [j, count] : missing) {
      list += (list.empty() ? "" : ", ") + j + " (" + std::to_string(count) + " articles)";
    }
    throw InputError("compare_fcr: no fit for journal(s): " + list);
  }

  ComparisonReport report;
  report.omega = omega;
  report.reference_year = reference_year;

  std::vector<kernels::ScoreInput> inputs;
  inputs.reserve(articles.size());
  for (const ArticleRecord& a : articles) {
    const NegBinFit& f = fits.at(a.journal_id);
    inputs.push_back({f.alpha_hat, f.beta_hat, a.citations,
                      static_cast<double>(reference_year - a.pub_year)});
  }
  report.article_scores = kernels::score_batch(inputs, omega);

  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> by_journal;
  std::vector<double> paired_fcr, paired_score;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    auto& [scores, fcrs] = by_journal[articles[i].journal_id];
    scores.push_back(report.article_scores[i]);
    if (articles[i].fcr) {
      fcrs.push_back(*articles[i].fcr);
      paired_fcr.push_back(*articles[i].fcr);
      paired_score.push_back(report.article_scores[i]);
    }
  }

  for (const auto& [journal, data] : by_journal) {
    JournalComparison jc{journal, data.first.size(), std::nullopt, describe(data.first)};
    if (!data.second.empty()) jc.fcr = describe(data.second);
    report.journals.push_back(std::move(jc));
  }

  report.paired_articles = paired_fcr.size();
  if (paired_fcr.empty()) {
    report.notice = "no FCR values present; correlation omitted";
  } else {
    try {
      report.pearson_r = pearson(paired_fcr, paired_score);
    } catch (const InputError& e) {
      report.notice = std::string("correlation omitted: ") + e.what();
    }
  }
  report.cv_ranking_fcr = cv_ranking(report.journals, true);
  report.cv_ranking_score = cv_ranking(report.journals, false);
  return report;
}

PmfSeries fitted_pmf_series(const CitationSample& sample, const PoissonFit& poisson,
                            const NegBinFit& negbin, Count x_max) {
  if (x_max < 0) throw InputError("fitted_pmf_series: x_max must be nonnegative");
  const GammaPrior prior = negbin.prior();
  const auto len = static_cast<std::size_t>(x_max) + 1;
  PmfSeries s;
  s.x.resize(len);
  s.empirical.assign(len, 0.0);
  s.poisson.resize(len);
  s.negbin.resize(len);

  const double n = static_cast<double>(sample.size());
  const CountHistogram& h = sample.histogram();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.values[i] <= x_max) s.empirical[static_cast<std::size_t>(h.values[i])] = h.weights[i] / n;
  }
  for (std::size_t i = 0; i < len; ++i) {
    const auto x = static_cast<Count>(i);
    s.x[i] = x;
    s.poisson[i] = poisson_pmf(x, poisson.theta_hat);
    s.negbin[i] = negbin_pmf(x, prior);
  }
  return s;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InputError("total_variation: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

}  // namespace bayescite
