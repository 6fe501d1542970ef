// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bayescite/analytics.hpp"
#include "bayescite/elasticity.hpp"
#include "bayescite/estimation.hpp"
#include "bayescite/io.hpp"
#include "bayescite/scoring.hpp"
#include "bayescite/synthetic.hpp"
#include "support/oracles.hpp"
#include "support/reference_data.hpp"

namespace {

using namespace bayescite;
using testing::kPublishedScores;
using testing::kReferenceJournals;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kEps = std::numeric_limits<double>::epsilon();
const std::string kCli = BAYESCITE_CLI_PATH;
const std::string kReferenceFits = std::string(BAYESCITE_DATA_DIR) + "/reference_journals.csv";

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with stdout captured; returns the exit status.
int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::string cmd = shell_quote(kCli);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::string text;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) text.append(buf, got);
  const int raw = ::pclose(pipe);
  if (out) *out = std::move(text);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Published score grid from the eight parameter pairs through the CLI.
Outcome table_reproduction() {
  const auto start = Clock::now();
  std::string out;
  const int status = run_cli({"table", "--fits", kReferenceFits}, &out);
  const double elapsed = seconds_since(start);
  if (status != 0) return {false, "table command failed"};

  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < kReferenceJournals.size(); ++j) {
    index[std::string(kReferenceJournals[j].name)] = j;
  }
  int cells = 0, exact = 0, within = 0;
  double worst = 0.0;
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const auto f = io::split_csv_line(line);
    const auto it = index.find(f.at(0));
    if (it == index.end() || f.size() != 13) return {false, "unexpected row: " + line};
    const auto row = static_cast<std::size_t>(std::stod(f[1]) / 2.0) - 1;
    for (std::size_t c = 0; c < 11; ++c) {
      const double published = kPublishedScores[it->second][row][c];
      const double err = std::abs(std::stod(f[c + 2]) - published);
      worst = std::max(worst, err);
      ++cells;
      exact += f[c + 2] == io::format_2dp(published);
      within += err <= 0.02 + 1e-12;
    }
  }
  const bool pass = cells == 352 && exact * 100 >= 95 * cells && within == cells && elapsed < 1.0;
  return {pass, std::to_string(exact) + "/" + std::to_string(cells) + " exact, " +
                    std::to_string(within) + " within 0.02, max |diff| " + fmt("%.4f", worst) +
                    ", " + fmt("%.3f", elapsed) + " s"};
}

// 2. Index of dispersion from samples built to the published moments.
Outcome dispersion_column() {
  double worst = 0.0;
  for (const auto& j : kReferenceJournals) {
    const CitationSample s(std::string(j.name),
                           testing::counts_with_moments(j.mean, j.variance, 100000));
    worst = std::max(worst, std::abs(index_of_dispersion(s) - j.dispersion) / j.dispersion);
  }
  return {worst < 5e-5, "max relative deviation " + fmt("%.2e", worst) + " (5 s.f. needs < 5e-5)"};
}

// 3. Poisson MLE equals the sample mean; AIC arithmetic.
Outcome poisson_identity() {
  std::mt19937_64 rng(3);
  int equal = 0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Count> counts(1 + rng() % 1000);
    for (auto& c : counts) c = static_cast<Count>(rng() % 300);
    counts[0] += 1;
    const CitationSample s("r", counts);
    equal += fit_poisson(s).theta_hat == s.mean();
  }
  const double a = aic(1, -30959.4);
  const bool aic_ok = std::abs(a - 61920.8) < 1e-9;
  return {equal == 100 && aic_ok, std::to_string(equal) + "/100 bit-equal to the mean, aic(1, -30959.4) = " +
                                      fmt("%.6f", a)};
}

// 4. Estimator recovery on the eight reference parameter pairs.
Outcome recovery() {
  const auto start = Clock::now();
  double worst_rel = 0.0, worst_grad = 0.0, min_margin = std::numeric_limits<double>::infinity();
  int wins = 0;
  std::uint64_t seed = 20240;
  for (const auto& j : kReferenceJournals) {
    const SimulationConfig cfg{j.alpha_hat, j.beta_hat, 100000, seed++};
    const RecoveryRecord r = recovery_experiment(cfg);
    if (!r.selection.negbin) return {false, std::string(j.name) + ": no NB fit"};
    worst_rel = std::max({worst_rel, *r.alpha_rel_error, *r.beta_rel_error});
    const CitationSample s = sample_negbin(cfg);
    const NbGradient g = negbin_gradient(s, r.selection.negbin->alpha_hat, r.selection.negbin->beta_hat);
    worst_grad = std::max({worst_grad, std::abs(g.d_alpha), std::abs(g.d_beta)});
    min_margin = std::min(min_margin, *r.aic_margin);
    wins += r.selection.negbin->aic < r.selection.poisson.aic;
  }
  const double elapsed = seconds_since(start);
  const bool pass = worst_rel < 0.05 && worst_grad < 1e-8 && wins == 8 && elapsed < 30.0;
  return {pass, "max rel error " + fmt("%.4f", worst_rel) + ", max |grad| " + fmt("%.1e", worst_grad) +
                    ", NB AIC lower in " + std::to_string(wins) + "/8 (min margin " +
                    fmt("%.0f", min_margin) + "), " + fmt("%.2f", elapsed) + " s"};
}

// 5. Scoring identities on random inputs. Tolerances are a few ulps of the
// operands: the identities are exact in real arithmetic.
Outcome scoring_identities() {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> param(0.02, 20.0), age(0.0, 60.0), om(0.1, 10.0);
  double worst_decomp = 0.0, worst_dx = 0.0, worst_dt = 0.0, worst_second_x = 0.0;
  int convex = 0;
  constexpr int kN = 10000;
  for (int i = 0; i < kN; ++i) {
    const GammaPrior p(param(rng), param(rng));
    const auto x = static_cast<Count>(rng() % 2000);
    const double t = 0.01 + age(rng), w = om(rng);
    auto f = [&](Count xx, double tt) { return impact_score(p, ScoreQuery(xx, tt, w)); };
    const auto d = credibility_decomposition(p, ScoreQuery(x, t, w));
    worst_decomp = std::max(worst_decomp, std::abs(d.sample_mean_term + d.prior_mean_term - f(x, t)) / (kEps * f(x, t)));
    worst_dx = std::max(worst_dx, std::abs(score_delta_citations(p, t, w) - (f(x + 1, t) - f(x, t))) / (kEps * f(x + 1, t)));
    worst_dt = std::max(worst_dt, std::abs(score_delta_time(p, x, t, w) - (f(x, t + 2) - f(x, t))) / (kEps * f(x, t)));
    worst_second_x = std::max(worst_second_x, std::abs(f(x + 2, t) - 2 * f(x + 1, t) + f(x, t)) / (kEps * f(x + 2, t)));
    convex += f(x, t + 4) - 2 * f(x, t + 2) + f(x, t) > 0.0;
  }
  const bool pass = worst_decomp <= 8 && worst_dx <= 8 && worst_dt <= 8 && worst_second_x <= 8 && convex == kN;
  return {pass, "max deviations in ulps: decomposition " + fmt("%.1f", worst_decomp) + ", dF/dx " +
                    fmt("%.1f", worst_dx) + ", dF/dt " + fmt("%.1f", worst_dt) + ", second diff x " +
                    fmt("%.1f", worst_second_x) + "; second diff t > 0 in " + std::to_string(convex) + "/" +
                    std::to_string(kN)};
}

// 6. Elasticity bounds, discrete-definition equivalence, omega invariance.
Outcome elasticities() {
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> param(0.01, 50.0), age(0.0, 80.0);
  int in_bounds = 0;
  double worst = 0.0;  // in ulps of the cancellation scale
  constexpr int kN = 10000;
  for (int i = 0; i < kN; ++i) {
    const GammaPrior p(param(rng), param(rng));
    const auto x = static_cast<Count>(rng() % 5000);
    const double t = age(rng);
    const double ec = citation_elasticity(p.alpha(), x), et = time_elasticity(p.beta(), t);
    in_bounds += ec >= 0 && ec < 1 && et > -1 && et <= 0;
    for (double w : {0.5, 1.0, 7.0}) {
      auto f = [&](Count xx, double tt) { return impact_score(p, ScoreQuery(xx, tt, w)); };
      const double dc = (f(x + 1, t) - f(x, t)) * static_cast<double>(x) / f(x, t);
      const double dt = (f(x, t + 2) - f(x, t)) / 2.0 * t / f(x, t);
      worst = std::max(worst, std::abs(dc - ec) / (kEps * (1 + p.alpha() + x)));
      worst = std::max(worst, std::abs(dt - et) / (kEps * (2 + p.beta() + t)));
    }
  }
  return {in_bounds == kN && worst <= 64,
          std::to_string(in_bounds) + "/" + std::to_string(kN) + " in bounds; discrete forms agree to " +
              fmt("%.1f", worst) + " scaled ulps under omega in {0.5, 1, 7}"};
}

// 7. NB pmf against numerical integration of Poisson x gamma.
Outcome mixture() {
  double worst = 0.0;
  for (const auto& j : kReferenceJournals) {
    const GammaPrior prior(j.alpha_hat, j.beta_hat);
    for (Count x = 0; x <= 50; ++x) {
      const GammaPrior post = posterior_update(prior, x, 1.0).as_prior();
      const double hi = testing::gamma_upper_cutoff(post.alpha(), post.beta(), 1e-17);
      const double peak = std::max(0.0, (post.alpha() - 1.0) / post.beta());
      const double integral = testing::integrate(
          [&](double th) { return poisson_pmf(x, th) * gamma_pdf(th, prior); }, 0.0, hi,
          {peak > 0.0 ? peak : hi / 2});
      worst = std::max(worst, std::abs(negbin_pmf(x, prior) - integral));
    }
  }
  return {worst < 1e-8, "max |pmf - quadrature| " + fmt("%.2e", worst) + " over 8 x 51 points"};
}

// 8. Comparison report on constructed cohorts; describe on a hand sample.
Outcome comparison() {
  std::map<std::string, NegBinFit> fits;
  for (const auto& j : kReferenceJournals) {
    NegBinFit f{};
    f.alpha_hat = j.alpha_hat;
    f.beta_hat = j.beta_hat;
    fits.emplace(std::string(j.name), f);
  }
  std::vector<ArticleRecord> cohort;
  int id = 0;
  for (const auto& j : kReferenceJournals) {
    for (int k = 0; k < 300; ++k) {
      auto rng = Xoshiro256::for_stream(8, static_cast<std::uint64_t>(id));
      const int age = static_cast<int>(rng.next() % 9);
      const Count x = age == 0 ? 0 : poisson_variate(rng, gamma_variate(rng, j.alpha_hat, j.beta_hat) * age);
      cohort.push_back({"a" + std::to_string(id++), std::string(j.name), 2023 - age, x, {}});
    }
  }
  const ComparisonReport plain = compare_fcr(cohort, fits, 2023);
  for (std::size_t i = 0; i < cohort.size(); ++i) cohort[i].fcr = 2.75 * plain.article_scores[i];
  const ComparisonReport paired = compare_fcr(cohort, fits, 2023);
  const double r = paired.pearson_r.value_or(0.0);

  bool ranking_stable = true;
  for (double w : {0.5, 2.0}) {
    ranking_stable = ranking_stable && compare_fcr(cohort, fits, 2023, w).cv_ranking_score == plain.cv_ranking_score;
  }

  const DescriptiveStats s = describe(std::vector<double>{1, 2, 3, 4});
  const double sd = std::sqrt(5.0 / 3.0);
  const double dev = std::max({std::abs(s.mean - 2.5), std::abs(s.median - 2.5), std::abs(s.sd - sd),
                               std::abs(s.se - sd / 2), std::abs(s.cv.value_or(9) - sd / 2.5),
                               std::abs(s.skewness.value_or(9)), std::abs(s.kurtosis.value_or(9) + 1.2),
                               std::abs(s.min - 1), std::abs(s.max - 4)});
  const bool pass = std::abs(r - 1.0) <= 1e-12 && ranking_stable && dev <= 1e-10;
  return {pass, "pearson_r - 1 = " + fmt("%.1e", r - 1.0) + ", CV ranking omega-invariant: " +
                    (ranking_stable ? "yes" : "no") + ", describe max deviation " + fmt("%.1e", dev)};
}

// 9. CLI determinism and the simulate -> fit -> table -> score pipeline.
Outcome determinism(const fs::path& dir) {
  const std::string a = (dir / "sim_a.csv").string(), b = (dir / "sim_b.csv").string();
  const std::vector<std::string> sim{"simulate", "--from-fits", kReferenceFits, "--n", "20000", "--seed", "909"};
  auto with_out = [](std::vector<std::string> v, const std::string& out) {
    v.insert(v.end(), {"--out", out});
    return v;
  };
  int statuses = 0;
  statuses |= run_cli(with_out(sim, a));
  statuses |= run_cli(with_out(sim, b));
  const bool identical = !slurp(a).empty() && slurp(a) == slurp(b);

  const std::string fits = (dir / "fits.csv").string();
  statuses |= run_cli({"fit", a, "--out", fits});
  statuses |= run_cli({"table", "--fits", fits, "--out", (dir / "table.csv").string()});
  std::string score;
  statuses |= run_cli({"score", "--fits", fits, "--journal", "Ag. Cell", "--citations", "10", "--age", "2"}, &score);
  const bool pass = identical && statuses == 0 && score.find("Ag. Cell,10,2,") != std::string::npos;
  return {pass, std::string("simulate output ") + (identical ? "byte-identical" : "DIFFERS") +
                    ", pipeline exit status " + std::to_string(statuses)};
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / ("bayescite_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"score table reproduction", table_reproduction},
      {"index of dispersion column", dispersion_column},
      {"Poisson MLE identity", poisson_identity},
      {"NB estimator recovery", recovery},
      {"scoring identities", scoring_identities},
      {"elasticity bounds and equivalence", elasticities},
      {"mixture correctness", mixture},
      {"comparison report sanity", comparison},
      {"determinism and pipeline", [&] { return determinism(dir); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first
              << " -- " << o.detail << std::endl;
  }
  fs::remove_all(dir);
  return failures == 0 ? 0 : 1;
}
