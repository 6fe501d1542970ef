// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

#include "bayescite/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bayescite/errors.hpp"

namespace bayescite::io {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool skippable(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* what) {
  field = trim(field);
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw InputError(where(line_no) + "cannot parse " + what + " '" + std::string(field) + "'");
  }
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

/// Reads lines, skipping comments and blanks; returns false at end of stream.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!skippable(line)) return true;
  }
  return false;
}

json fit_to_json(const FitRecord& r) {
  json j;
  j["journal_id"] = r.journal_id;
  j["n"] = r.poisson.n;
  j["poisson"] = {{"theta_hat", r.poisson.theta_hat},
                  {"log_likelihood", r.poisson.log_likelihood},
                  {"aic", r.poisson.aic}};
  if (r.negbin) {
    j["negbin"] = {{"alpha_hat", r.negbin->alpha_hat},   {"beta_hat", r.negbin->beta_hat},
                   {"log_likelihood", r.negbin->log_likelihood}, {"aic", r.negbin->aic},
                   {"converged", r.negbin->converged},   {"iterations", r.negbin->iterations}};
  } else {
    j["negbin"] = nullptr;
  }
  j["winner"] = to_string(r.winner);
  return j;
}

Model parse_model(std::string_view s, std::size_t line_no) {
  s = trim(s);
  if (s == "Poisson") return Model::kPoisson;
  if (s == "NegBin") return Model::kNegBin;
  throw InputError(where(line_no) + "unknown model '" + std::string(s) + "'");
}

std::vector<FitRecord> read_fits_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("fit file: invalid JSON: ") + e.what());
  }
  std::vector<FitRecord> fits;
  try {
    for (const json& j : doc.at("fits")) {
      FitRecord r{};
      r.journal_id = j.at("journal_id").get<std::string>();
      r.poisson.n = j.value("n", std::size_t{0});
      if (j.contains("poisson") && !j["poisson"].is_null()) {
        const json& p = j["poisson"];
        r.poisson.theta_hat = p.value("theta_hat", 0.0);
        r.poisson.log_likelihood = p.value("log_likelihood", 0.0);
        r.poisson.aic = p.value("aic", 0.0);
      }
      if (j.contains("negbin") && !j["negbin"].is_null()) {
        const json& b = j["negbin"];
        NegBinFit nb{};
        nb.alpha_hat = b.at("alpha_hat").get<double>();
        nb.beta_hat = b.at("beta_hat").get<double>();
        nb.log_likelihood = b.value("log_likelihood", 0.0);
        nb.aic = b.value("aic", 0.0);
        nb.n = r.poisson.n;
        nb.converged = b.value("converged", true);
        nb.iterations = b.value("iterations", 0);
        r.negbin = nb;
      }
      const std::string winner = j.value("winner", r.negbin ? "NegBin" : "Poisson");
      r.winner = parse_model(winner, 0);
      fits.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("fit file: ") + e.what());
  }
  return fits;
}

std::vector<FitRecord> read_fits_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw InputError("fit file: empty");

  std::map<std::string, std::size_t> column;
  const auto header = split_csv_line(line);
  for (std::size_t i = 0; i < header.size(); ++i) column[header[i]] = i;
  for (const char* required : {"journal_id", "alpha_hat", "beta_hat"}) {
    if (!column.contains(required)) {
      throw InputError(where(line_no) + "fit file header lacks column '" + required + "'");
    }
  }

  std::vector<FitRecord> fits;
  while (next_line(in, line, line_no)) {
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw InputError(where(line_no) + "expected " + std::to_string(header.size()) +
                       " fields, got " + std::to_string(fields.size()));
    }
    auto get = [&](const char* name) -> std::string_view {
      const auto it = column.find(name);
      return it == column.end() ? std::string_view{} : trim(fields[it->second]);
    };
    auto opt_double = [&](const char* name) -> std::optional<double> {
      const std::string_view f = get(name);
      if (f.empty()) return std::nullopt;
      return parse_number<double>(f, line_no, name);
    };

    FitRecord r{};
    r.journal_id = std::string(get("journal_id"));
    if (r.journal_id.empty()) throw InputError(where(line_no) + "empty journal_id");
    if (const auto n = get("n"); !n.empty()) r.poisson.n = parse_number<std::size_t>(n, line_no, "n");
    r.poisson.theta_hat = opt_double("theta_hat").value_or(0.0);
    r.poisson.aic = opt_double("poisson_aic").value_or(0.0);
    r.poisson.log_likelihood = opt_double("poisson_loglik").value_or(0.0);

    const auto alpha = opt_double("alpha_hat");
    const auto beta = opt_double("beta_hat");
    if (alpha.has_value() != beta.has_value()) {
      throw InputError(where(line_no) + "journal '" + r.journal_id +
                       "' has only one of alpha_hat, beta_hat");
    }
    if (alpha) {
      NegBinFit nb{};
      nb.alpha_hat = *alpha;
      nb.beta_hat = *beta;
      nb.aic = opt_double("negbin_aic").value_or(0.0);
      nb.log_likelihood = opt_double("negbin_loglik").value_or(0.0);
      nb.n = r.poisson.n;
      const std::string_view conv = get("converged");
      nb.converged = conv.empty() || conv == "true" || conv == "1";
      if (const auto it = get("iterations"); !it.empty()) {
        nb.iterations = parse_number<int>(it, line_no, "iterations");
      }
      if (!(nb.alpha_hat > 0.0) || !(nb.beta_hat > 0.0)) {
        throw InputError(where(line_no) + "journal '" + r.journal_id +
                         "' has nonpositive alpha_hat/beta_hat");
      }
      r.negbin = nb;
    }
    const std::string_view winner = get("winner");
    r.winner = winner.empty() ? (r.negbin ? Model::kNegBin : Model::kPoisson)
                              : parse_model(winner, line_no);
    fits.push_back(std::move(r));
  }
  return fits;
}

}  // namespace

std::string csv_field(std::string_view field) {
  const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos ||
                            (!field.empty() && (field.front() == ' ' || field.back() == ' ' ||
                                                field.front() == '#'));
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  line = trim(line);
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.emplace_back(trim(current));
  return fields;
}

std::vector<CitationSample> read_counts(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw InputError("counts file: no header (file is empty)");
  if (trim(line) != kCountsHeader) {
    throw InputError(where(line_no) + "counts header must be '" + std::string(kCountsHeader) +
                     "', got '" + std::string(trim(line)) + "'");
  }

  std::map<std::string, std::vector<Count>> by_journal;
  std::size_t rows = 0;
  while (next_line(in, line, line_no)) {
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw InputError(where(line_no) + "expected 2 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw InputError(where(line_no) + "empty journal_id");
    const auto count = parse_number<Count>(fields[1], line_no, "count");
    if (count < 0) throw InputError(where(line_no) + "negative count");
    by_journal[fields[0]].push_back(count);
    ++rows;
  }
  if (rows == 0) throw InputError("counts file: no observations");

  std::vector<CitationSample> samples;
  samples.reserve(by_journal.size());
  for (auto& [journal, counts] : by_journal) samples.emplace_back(journal, std::move(counts));
  return samples;
}

std::vector<CitationSample> read_counts_file(const std::string& path) {
  auto in = open(path);
  return read_counts(in);
}

void write_counts(std::ostream& out, const std::vector<CitationSample>& samples,
                  const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << kCountsHeader << '\n';
  for (const CitationSample& s : samples) {
    const std::string id = csv_field(s.label());
    for (Count c : s.counts()) out << id << ',' << c << '\n';
  }
}

FitRecord to_record(const std::string& journal_id, const ModelSelection& selection) {
  return {journal_id, selection.poisson, selection.negbin, selection.winner};
}

void write_fits_csv(std::ostream& out, const std::vector<FitRecord>& fits) {
  out << kFitsHeader << '\n';
  for (const FitRecord& r : fits) {
    out << csv_field(r.journal_id) << ',' << format_full(r.poisson.theta_hat) << ','
        << format_full(r.poisson.aic) << ',';
    if (r.negbin) {
      out << format_full(r.negbin->alpha_hat) << ',' << format_full(r.negbin->beta_hat) << ','
          << format_full(r.negbin->aic);
    } else {
      out << ",,";
    }
    out << ',' << to_string(r.winner) << ',' << r.poisson.n << ','
        << format_full(r.poisson.log_likelihood) << ',';
    if (r.negbin) {
      out << format_full(r.negbin->log_likelihood) << ','
          << (r.negbin->converged ? "true" : "false") << ',' << r.negbin->iterations;
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_fits_json(std::ostream& out, const std::vector<FitRecord>& fits) {
  json doc;
  doc["fits"] = json::array();
  for (const FitRecord& r : fits) doc["fits"].push_back(fit_to_json(r));
  out << doc.dump(2) << '\n';
}

std::vector<FitRecord> read_fits(std::istream& in) {
  in >> std::ws;
  if (in.peek() == '{') return read_fits_json(in);
  return read_fits_csv(in);
}

std::vector<FitRecord> read_fits_file(const std::string& path) {
  auto in = open(path);
  return read_fits(in);
}

std::map<std::string, NegBinFit> negbin_fits(const std::vector<FitRecord>& fits) {
  std::map<std::string, NegBinFit> out;
  for (const FitRecord& r : fits) {
    if (r.negbin) out.emplace(r.journal_id, *r.negbin);
  }
  return out;
}

std::vector<ArticleRecord> read_articles(std::istream& in, std::optional<int> reference_year) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw InputError("articles file: no header (file is empty)");
  constexpr std::string_view kWithoutFcr = "article_id,journal_id,pub_year,citations";
  const std::string_view header = trim(line);
  const bool has_fcr = header == kArticlesHeader;
  if (!has_fcr && header != kWithoutFcr) {
    throw InputError(where(line_no) + "articles header must be '" +
                     std::string(kArticlesHeader) + "' (fcr column optional)");
  }
  const std::size_t width = has_fcr ? 5 : 4;

  std::vector<ArticleRecord> articles;
  while (next_line(in, line, line_no)) {
    auto fields = split_csv_line(line);
    if (fields.size() != width) {
      throw InputError(where(line_no) + "expected " + std::to_string(width) + " fields, got " +
                       std::to_string(fields.size()));
    }
    ArticleRecord a{};
    a.article_id = fields[0];
    a.journal_id = fields[1];
    if (a.journal_id.empty()) throw InputError(where(line_no) + "empty journal_id");
    a.pub_year = parse_number<int>(fields[2], line_no, "pub_year");
    a.citations = parse_number<Count>(fields[3], line_no, "citations");
    if (a.citations < 0) throw InputError(where(line_no) + "negative citations");
    if (a.pub_year < 1900 || (reference_year && a.pub_year > *reference_year)) {
      throw InputError(where(line_no) + "pub_year " + std::to_string(a.pub_year) +
                       " outside [1900, reference year]");
    }
    if (has_fcr && !fields[4].empty()) {
      const double fcr = parse_number<double>(fields[4], line_no, "fcr");
      if (!(fcr >= 0.0)) throw InputError(where(line_no) + "negative fcr");
      a.fcr = fcr;
    }
    articles.push_back(std::move(a));
  }
  return articles;
}

std::vector<ArticleRecord> read_articles_file(const std::string& path,
                                              std::optional<int> reference_year) {
  auto in = open(path);
  return read_articles(in, reference_year);
}

std::string format_2dp(double v) {
  // glibc printf rounds the exact binary value in the current (nearest-even)
  // mode.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string format_full(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

}  // namespace bayescite::io
