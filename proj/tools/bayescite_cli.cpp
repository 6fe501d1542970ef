// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// bayescite command-line tool.
//
//   bayescite fit counts.csv                      per-journal Poisson / NB fits
//   bayescite table --fits fits.csv               score tables
//   bayescite score --fits fits.csv --journal J --citations X --age T
//   bayescite elasticity --fits fits.csv          elasticity curves
//   bayescite stats --fits F --articles A --reference-year Y
//   bayescite compare --fits F --articles A --reference-year Y
//   bayescite simulate --alpha A --beta B --n N --seed S
//
// Exit status is 0 exactly when no error was reported.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bayescite/analytics.hpp"
#include "bayescite/elasticity.hpp"
#include "bayescite/errors.hpp"
#include "bayescite/estimation.hpp"
#include "bayescite/io.hpp"
#include "bayescite/scoring.hpp"
#include "bayescite/synthetic.hpp"

namespace {

using namespace bayescite;
using nlohmann::json;

enum class Format { kCsv, kJson };

struct Common {
  std::string out;
  Format format = Format::kCsv;
  double omega = 1.0;
};

// Grid specs are either a comma list ("2,4,6,8") or an inclusive range
// "start:stop:step" ("0:100:10").
template <typename T>
std::vector<T> parse_grid(const std::string& text, const char* name) {
  auto number = [&](const std::string& s) -> T {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
      throw InputError(std::string(name) + ": cannot parse '" + s + "'");
    }
    if constexpr (std::is_integral_v<T>) {
      if (v != std::floor(v)) throw InputError(std::string(name) + ": '" + s + "' is not an integer");
    }
    return static_cast<T>(v);
  };

  std::vector<T> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw InputError(std::string(name) + ": range must be start:stop:step");
    const T start = number(parts[0]), stop = number(parts[1]), step = number(parts[2]);
    if (!(step > 0) || stop < start) {
      throw InputError(std::string(name) + ": range needs step > 0 and stop >= start");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw InputError(std::string(name) + ": range has too many points");
    for (std::size_t i = 0; i < count; ++i) grid.push_back(static_cast<T>(start + step * static_cast<T>(i)));
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) grid.push_back(number(p));
  }
  if (grid.empty()) throw InputError(std::string(name) + ": empty grid");
  return grid;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_csv(const std::optional<double>& v) { return v ? io::format_full(*v) : ""; }

// Output goes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
};

std::vector<io::FitRecord> load_fits(const std::string& path) {
  auto fits = io::read_fits_file(path);
  if (fits.empty()) throw InputError("fit file '" + path + "' has no journals");
  std::stable_sort(fits.begin(), fits.end(),
                   [](const auto& a, const auto& b) { return a.journal_id < b.journal_id; });
  for (std::size_t i = 1; i < fits.size(); ++i) {
    if (fits[i].journal_id == fits[i - 1].journal_id) {
      throw InputError("fit file lists journal '" + fits[i].journal_id + "' twice");
    }
  }
  return fits;
}

std::string known_journals(const std::vector<io::FitRecord>& fits) {
  std::string s;
  for (const auto& f : fits) s += (s.empty() ? "" : ", ") + f.journal_id;
  return s;
}

const NegBinFit& require_negbin(const io::FitRecord& r) {
  if (!r.negbin) {
    throw InputError("journal '" + r.journal_id +
                     "' has no negative binomial parameters (alpha_hat, beta_hat); "
                     "scores need the gamma prior");
  }
  return *r.negbin;
}

// ---------------------------------------------------------------- fit

struct FitArgs {
  std::string counts;
  std::string series_out;
  Count x_max = -1;
};

void cmd_fit(const FitArgs& a, const Common& c) {
  const auto samples = io::read_counts_file(a.counts);
  std::vector<io::FitRecord> records;
  std::vector<std::pair<const CitationSample*, ModelSelection>> fitted;
  for (const CitationSample& s : samples) {
    ModelSelection sel;
    try {
      sel = select_model(s);
    } catch (const DegenerateFitError& e) {
      throw InputError("journal '" + s.label() + "': " + e.what());
    }
    if (!sel.negbin) {
      std::cerr << "bayescite: warning: journal '" << s.label()
                << "': no negative binomial fit (" << sel.negbin_unavailable_reason
                << "); Poisson only\n";
    }
    records.push_back(io::to_record(s.label(), sel));
    fitted.emplace_back(&s, std::move(sel));
  }

  Output out(c.out);
  if (c.format == Format::kJson) {
    io::write_fits_json(out.stream(), records);
  } else {
    io::write_fits_csv(out.stream(), records);
  }
  out.finish();

  if (!a.series_out.empty()) {
    Output series(a.series_out);
    auto& os = series.stream();
    os << "journal_id,x,empirical,poisson,negbin\n";
    for (const auto& [sample, sel] : fitted) {
      if (!sel.negbin) continue;
      const Count x_max = a.x_max >= 0 ? a.x_max : sample->max();
      const PmfSeries p = fitted_pmf_series(*sample, sel.poisson, *sel.negbin, x_max);
      const std::string id = io::csv_field(sample->label());
      for (std::size_t i = 0; i < p.x.size(); ++i) {
        os << id << ',' << p.x[i] << ',' << io::format_full(p.empirical[i]) << ','
           << io::format_full(p.poisson[i]) << ',' << io::format_full(p.negbin[i]) << '\n';
      }
    }
    series.finish();
  }
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string fits;
  std::string journal;
  std::string t_grid = "2,4,6,8";
  std::string x_grid = "0:100:10";
};

void cmd_table(const TableArgs& a, const Common& c) {
  const auto fits = load_fits(a.fits);
  const auto t_grid = parse_grid<double>(a.t_grid, "--t-grid");
  const auto x_grid = parse_grid<Count>(a.x_grid, "--x-grid");

  std::vector<ScoreTable> tables;
  for (const auto& r : fits) {
    if (!a.journal.empty() && r.journal_id != a.journal) continue;
    tables.push_back(score_table(require_negbin(r).prior(), c.omega, t_grid, x_grid, r.journal_id));
  }
  if (tables.empty()) {
    throw InputError("unknown journal '" + a.journal + "'; known journals: " + known_journals(fits));
  }

  Output out(c.out);
  auto& os = out.stream();
  if (c.format == Format::kJson) {
    json doc;
    doc["omega"] = c.omega;
    doc["t_grid"] = t_grid;
    doc["x_grid"] = x_grid;
    doc["tables"] = json::array();
    for (const auto& t : tables) {
      json rows = json::array();
      for (std::size_t i = 0; i < t.t_grid.size(); ++i) {
        rows.push_back(std::vector<double>(t.values.begin() + static_cast<std::ptrdiff_t>(i * x_grid.size()),
                                           t.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * x_grid.size())));
      }
      doc["tables"].push_back({{"journal_id", t.label}, {"values", rows}});
    }
    os << doc.dump(2) << '\n';
  } else {
    os << "journal_id,t";
    for (Count x : x_grid) os << ",x" << x;
    os << '\n';
    for (const auto& t : tables) {
      const std::string id = io::csv_field(t.label);
      for (std::size_t i = 0; i < t.t_grid.size(); ++i) {
        os << id << ',' << io::format_full(t.t_grid[i]);
        for (std::size_t j = 0; j < x_grid.size(); ++j) os << ',' << io::format_2dp(t.at(i, j));
        os << '\n';
      }
    }
  }
  out.finish();
}

// ---------------------------------------------------------------- score

struct ScoreArgs {
  std::string fits;
  std::string journal;
  std::optional<double> alpha;
  std::optional<double> beta;
  Count citations = -1;
  double age = -1.0;
};

void cmd_score(const ScoreArgs& a, const Common& c) {
  std::string journal = a.journal;
  std::optional<GammaPrior> prior;
  if (a.alpha || a.beta) {
    if (!a.alpha || !a.beta) throw InputError("--alpha and --beta go together");
    if (!a.fits.empty()) throw InputError("give either --fits or --alpha/--beta, not both");
    prior = GammaPrior(*a.alpha, *a.beta);
    if (journal.empty()) journal = "custom";
  } else {
    if (a.fits.empty()) throw InputError("score needs --fits (or --alpha and --beta)");
    const auto fits = load_fits(a.fits);
    if (journal.empty()) {
      if (fits.size() != 1) {
        throw InputError("--journal is required; known journals: " + known_journals(fits));
      }
      journal = fits.front().journal_id;
    }
    const auto it = std::find_if(fits.begin(), fits.end(),
                                 [&](const auto& r) { return r.journal_id == journal; });
    if (it == fits.end()) {
      throw InputError("unknown journal '" + journal + "'; known journals: " + known_journals(fits));
    }
    prior = require_negbin(*it).prior();
  }

  const ScoreQuery q(a.citations, a.age, c.omega);
  const double score = impact_score(*prior, q);
  std::optional<CredibilityDecomposition> d;
  std::string notice;
  try {
    d = credibility_decomposition(*prior, q);
  } catch (const InputError& e) {
    notice = "credibility decomposition undefined at t = 0 with citations > 0";
    std::cerr << "bayescite: note: " << notice << '\n';
  }

  Output out(c.out);
  auto& os = out.stream();
  if (c.format == Format::kJson) {
    json j{{"journal_id", journal}, {"alpha", prior->alpha()}, {"beta", prior->beta()},
           {"x_plus", q.x_plus()},  {"t", q.t()},               {"omega", q.omega()},
           {"score", score}};
    if (d) {
      j["gamma"] = d->gamma;
      j["sample_mean_term"] = d->sample_mean_term;
      j["prior_mean_term"] = d->prior_mean_term;
    } else {
      j["gamma"] = j["sample_mean_term"] = j["prior_mean_term"] = nullptr;
      j["notice"] = notice;
    }
    os << j.dump(2) << '\n';
  } else {
    os << "journal_id,x_plus,t,omega,score,gamma,sample_mean_term,prior_mean_term\n"
       << io::csv_field(journal) << ',' << q.x_plus() << ',' << io::format_full(q.t()) << ','
       << io::format_full(q.omega()) << ',' << io::format_full(score) << ',';
    if (d) {
      os << io::format_full(d->gamma) << ',' << io::format_full(d->sample_mean_term) << ','
         << io::format_full(d->prior_mean_term);
    } else {
      os << ",,";
    }
    os << '\n';
  }
  out.finish();
}

// ---------------------------------------------------------------- elasticity

struct ElasticityArgs {
  std::string fits;
  std::string t_grid = "0:20:1";
  std::string x_grid = "0:100:1";
};

void cmd_elasticity(const ElasticityArgs& a, const Common& c) {
  const auto fits = load_fits(a.fits);
  const auto t_grid = parse_grid<double>(a.t_grid, "--t-grid");
  const auto x_grid = parse_grid<Count>(a.x_grid, "--x-grid");
  std::vector<LabelledFit> labelled;
  for (const auto& r : fits) labelled.push_back({r.journal_id, require_negbin(r)});
  const auto curves = elasticity_curves(labelled, x_grid, t_grid);

  Output out(c.out);
  auto& os = out.stream();
  if (c.format == Format::kJson) {
    json doc = json::array();
    for (const auto& curve : curves) {
      doc.push_back({{"journal_id", curve.label},
                     {"axis", to_string(curve.axis)},
                     {"grid", curve.grid},
                     {"elasticity", curve.elasticities}});
    }
    os << json{{"curves", doc}}.dump(2) << '\n';
  } else {
    os << "journal_id,axis,value,elasticity\n";
    for (const auto& curve : curves) {
      const std::string id = io::csv_field(curve.label);
      for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        os << id << ',' << to_string(curve.axis) << ',' << io::format_full(curve.grid[i]) << ','
           << io::format_full(curve.elasticities[i]) << '\n';
      }
    }
  }
  out.finish();
}

// ---------------------------------------------------------------- stats / compare

struct ArticlesArgs {
  std::string fits;
  std::string articles;
  int reference_year = 0;
};

ComparisonReport build_report(const ArticlesArgs& a, const Common& c,
                              std::vector<ArticleRecord>& articles) {
  articles = io::read_articles_file(a.articles, a.reference_year);
  if (articles.empty()) throw InputError("articles file '" + a.articles + "' has no rows");
  const auto fits = io::negbin_fits(load_fits(a.fits));
  return compare_fcr(articles, fits, a.reference_year, c.omega);
}

json stats_json(const DescriptiveStats& s) {
  return {{"n", s.n},   {"mean", s.mean}, {"se", s.se},   {"median", s.median},
          {"sd", s.sd}, {"cv", optional_json(s.cv)},
          {"kurtosis", optional_json(s.kurtosis)},
          {"skewness", optional_json(s.skewness)},
          {"min", s.min}, {"max", s.max}};
}

void write_stats_row(std::ostream& os, const std::string& journal, const char* metric,
                     const DescriptiveStats& s) {
  os << io::csv_field(journal) << ',' << metric << ',' << s.n << ',' << io::format_full(s.mean)
     << ',' << io::format_full(s.se) << ',' << io::format_full(s.median) << ','
     << io::format_full(s.sd) << ',' << optional_csv(s.cv) << ',' << optional_csv(s.kurtosis)
     << ',' << optional_csv(s.skewness) << ',' << io::format_full(s.min) << ','
     << io::format_full(s.max) << '\n';
}

json report_json(const ComparisonReport& r) {
  json doc;
  doc["omega"] = r.omega;
  doc["reference_year"] = r.reference_year;
  doc["pearson_r"] = optional_json(r.pearson_r);
  doc["paired_articles"] = r.paired_articles;
  if (!r.notice.empty()) doc["notice"] = r.notice;
  doc["journals"] = json::array();
  for (const auto& j : r.journals) {
    doc["journals"].push_back({{"journal_id", j.journal_id},
                               {"articles", j.articles},
                               {"fcr", j.fcr ? stats_json(*j.fcr) : json(nullptr)},
                               {"score", stats_json(j.score)}});
  }
  doc["cv_ranking_fcr"] = r.cv_ranking_fcr;
  doc["cv_ranking_score"] = r.cv_ranking_score;
  return doc;
}

void cmd_stats(const ArticlesArgs& a, const Common& c) {
  std::vector<ArticleRecord> articles;
  const ComparisonReport r = build_report(a, c, articles);
  if (r.notice.size()) std::cerr << "bayescite: note: " << r.notice << '\n';
  Output out(c.out);
  auto& os = out.stream();
  if (c.format == Format::kJson) {
    os << report_json(r).dump(2) << '\n';
  } else {
    os << "journal_id,metric,n,mean,se,median,sd,cv,kurtosis,skewness,min,max\n";
    for (const auto& j : r.journals) {
      if (j.fcr) write_stats_row(os, j.journal_id, "fcr", *j.fcr);
      write_stats_row(os, j.journal_id, "score", j.score);
    }
  }
  out.finish();
}

void cmd_compare(const ArticlesArgs& a, const Common& c) {
  std::vector<ArticleRecord> articles;
  const ComparisonReport r = build_report(a, c, articles);
  if (r.notice.size()) std::cerr << "bayescite: note: " << r.notice << '\n';
  Output out(c.out);
  auto& os = out.stream();
  if (c.format == Format::kJson) {
    json doc = report_json(r);
    json scores = json::array();
    for (std::size_t i = 0; i < articles.size(); ++i) {
      scores.push_back({{"article_id", articles[i].article_id},
                        {"journal_id", articles[i].journal_id},
                        {"score", r.article_scores[i]},
                        {"fcr", optional_json(articles[i].fcr)}});
    }
    doc["articles"] = scores;
    os << doc.dump(2) << '\n';
  } else {
    if (r.pearson_r) {
      os << "# pearson_r=" << io::format_full(*r.pearson_r) << " over " << r.paired_articles
         << " articles\n";
    } else {
      os << "# " << r.notice << '\n';
    }
    os << "article_id,journal_id,pub_year,citations,t,score,fcr\n";
    for (std::size_t i = 0; i < articles.size(); ++i) {
      const auto& art = articles[i];
      os << io::csv_field(art.article_id) << ',' << io::csv_field(art.journal_id) << ','
         << art.pub_year << ',' << art.citations << ',' << (a.reference_year - art.pub_year)
         << ',' << io::format_full(r.article_scores[i]) << ',' << optional_csv(art.fcr) << '\n';
    }
  }
  out.finish();
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> theta;
  std::string from_fits;
  std::string journal = "synthetic";
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

constexpr const char* kProvenance =
    "generator xoshiro256** seeded by splitmix64, one stream per (seed, index); "
    "gamma by Marsaglia-Tsang; Poisson by inversion below 10, PTRS above";

void cmd_simulate(const SimulateArgs& a, const Common& c) {
  if (c.format != Format::kCsv) throw InputError("simulate writes CSV only");
  if (a.n < 1) throw InputError("--n must be at least 1");
  std::vector<CitationSample> samples;
  std::vector<std::string> comments{std::string("bayescite simulate: ") + kProvenance};

  if (!a.from_fits.empty()) {
    if (a.alpha || a.beta || a.theta) {
      throw InputError("--from-fits excludes --alpha/--beta/--theta");
    }
    // Journal j (in identifier order) uses seed + j.
    const auto fits = load_fits(a.from_fits);
    std::uint64_t offset = 0;
    for (const auto& r : fits) {
      const NegBinFit& nb = require_negbin(r);
      const SimulationConfig cfg{nb.alpha_hat, nb.beta_hat, a.n, a.seed + offset};
      comments.push_back(r.journal_id + ": alpha=" + io::format_full(cfg.alpha_true) +
                         " beta=" + io::format_full(cfg.beta_true) + " n=" +
                         std::to_string(cfg.n) + " seed=" + std::to_string(cfg.seed));
      samples.push_back(sample_negbin(cfg, r.journal_id));
      ++offset;
    }
  } else if (a.theta) {
    if (a.alpha || a.beta) throw InputError("--theta excludes --alpha/--beta");
    comments.push_back(a.journal + ": poisson theta=" + io::format_full(*a.theta) +
                       " n=" + std::to_string(a.n) + " seed=" + std::to_string(a.seed));
    samples.push_back(sample_poisson(*a.theta, a.n, a.seed, a.journal));
  } else {
    if (!a.alpha || !a.beta) throw InputError("simulate needs --alpha and --beta (or --theta, or --from-fits)");
    const SimulationConfig cfg{*a.alpha, *a.beta, a.n, a.seed};
    comments.push_back(a.journal + ": alpha=" + io::format_full(cfg.alpha_true) + " beta=" +
                       io::format_full(cfg.beta_true) + " n=" + std::to_string(cfg.n) +
                       " seed=" + std::to_string(cfg.seed));
    samples.push_back(sample_negbin(cfg, a.journal));
  }

  Output out(c.out);
  io::write_counts(out.stream(), samples, comments);
  out.finish();
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* sub, Common& c, bool with_omega) {
  sub->add_option("--out,-o", c.out, "Write output to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::kCsv},
                                                                         {"json", Format::kJson}},
                                          CLI::ignore_case));
  if (with_omega) {
    sub->add_option("--omega", c.omega, "Score of a publication with no citations at t = 0")
        ->check(CLI::PositiveNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian impact scores for citation counts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bayescite 1.0.0");

  Common common;

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit Poisson and negative binomial models per journal");
  fit_cmd->add_option("counts", fit.counts, "Counts CSV (journal_id,count)")->required();
  fit_cmd->add_option("--series-out", fit.series_out,
                      "Also write empirical vs fitted pmf series to this CSV");
  fit_cmd->add_option("--x-max", fit.x_max, "Largest count in the pmf series (default: sample max)");
  add_common(fit_cmd, common, false);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Score tables over a (t, x+) grid");
  table_cmd->add_option("--fits", table.fits, "Fit file (CSV or JSON)")->required();
  table_cmd->add_option("--journal", table.journal, "Only this journal");
  table_cmd->add_option("--t-grid", table.t_grid, "Ages: list '2,4,6,8' or range 'a:b:step'");
  table_cmd->add_option("--x-grid", table.x_grid, "Citation counts: list or range");
  add_common(table_cmd, common, true);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score one publication");
  score_cmd->add_option("--fits", score.fits, "Fit file (CSV or JSON)");
  score_cmd->add_option("--journal", score.journal, "Journal to take the prior from");
  score_cmd->add_option("--alpha", score.alpha, "Prior shape (instead of --fits)");
  score_cmd->add_option("--beta", score.beta, "Prior rate (instead of --fits)");
  score_cmd->add_option("--citations,-x", score.citations, "Accumulated citations x+")
      ->required()
      ->check(CLI::NonNegativeNumber);
  score_cmd->add_option("--age,-t", score.age, "Years since publication")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(score_cmd, common, true);

  ElasticityArgs elasticity;
  auto* el_cmd = app.add_subcommand("elasticity", "Citation and time elasticity curves");
  el_cmd->add_option("--fits", elasticity.fits, "Fit file (CSV or JSON)")->required();
  el_cmd->add_option("--t-grid", elasticity.t_grid, "Ages (default 0:20:1)");
  el_cmd->add_option("--x-grid", elasticity.x_grid, "Citation counts (default 0:100:1)");
  add_common(el_cmd, common, false);

  ArticlesArgs arts;
  auto* stats_cmd = app.add_subcommand("stats", "Per-journal descriptive statistics of FCR and score");
  auto* cmp_cmd = app.add_subcommand("compare", "Per-article scores and FCR correlation");
  for (auto* sub : {stats_cmd, cmp_cmd}) {
    sub->add_option("--fits", arts.fits, "Fit file (CSV or JSON)")->required();
    sub->add_option("--articles", arts.articles,
                    "Articles CSV (article_id,journal_id,pub_year,citations[,fcr])")
        ->required();
    sub->add_option("--reference-year", arts.reference_year, "Year ages are measured from")
        ->required();
    add_common(sub, common, true);
  }

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Draw synthetic citation counts");
  sim_cmd->add_option("--alpha", sim.alpha, "Gamma prior shape")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--beta", sim.beta, "Gamma prior rate")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--theta", sim.theta, "Poisson mean (Poisson data instead of NB)")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--from-fits", sim.from_fits,
                      "Simulate every journal of a fit file (journal j uses seed + j)");
  sim_cmd->add_option("--journal", sim.journal, "journal_id written for the sample");
  sim_cmd->add_option("--n", sim.n, "Observations per journal")->required();
  sim_cmd->add_option("--seed", sim.seed, "Random seed")->required();
  add_common(sim_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (fit_cmd->parsed()) cmd_fit(fit, common);
    else if (table_cmd->parsed()) cmd_table(table, common);
    else if (score_cmd->parsed()) cmd_score(score, common);
    else if (el_cmd->parsed()) cmd_elasticity(elasticity, common);
    else if (stats_cmd->parsed()) cmd_stats(arts, common);
    else if (cmp_cmd->parsed()) cmd_compare(arts, common);
    else if (sim_cmd->parsed()) cmd_simulate(sim, common);
  } catch (const std::exception& e) {
    std::cerr << "bayescite: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
