#pragma once

// Report emission. JSON keeps full double precision; CSV and Markdown use six
// significant digits.

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdrank/aggregate.hpp"
#include "cdrank/analysis.hpp"

namespace cdrank {

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { Json, Csv, Markdown };

inline const char* to_string(ReportFormat f) noexcept {
  switch (f) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Markdown: return "markdown";
  }
  return "?";
}

inline const char* file_extension(ReportFormat f) noexcept {
  switch (f) {
    case ReportFormat::Json: return ".json";
    case ReportFormat::Csv: return ".csv";
    case ReportFormat::Markdown: return ".md";
  }
  return "";
}

struct ReportConfig {
  double alpha = 0.05;
  Direction direction = Direction::HigherIsBetter;
  Mode mode = Mode::Corrected;
  MissingPolicy missing = MissingPolicy::Error;
  std::vector<ReportFormat> formats;
  std::string diagram_path;
  bool check_consistency = false;
};

struct Report {
  ReportConfig config;
  std::vector<AnalysisResult> analyses;
  AggregateReport aggregate;
  std::vector<TaggedFinding> findings;
};

inline std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline nlohmann::json finding_to_json(const TaggedFinding& f) {
  return {{"analysis", f.analysis},
          {"mode", f.mode},
          {"better_mean_approach", f.finding.better_mean_approach},
          {"worse_mean_approach", f.finding.worse_mean_approach},
          {"mean_delta", f.finding.mean_delta},
          {"rankscore_delta", f.finding.rankscore_delta},
          {"dominated", f.finding.dominated},
          {"severity", f.finding.dominated && f.mode == "corrected" ? "error" : "warning"}};
}

inline nlohmann::json analysis_to_json(const AnalysisResult& a) {
  using nlohmann::json;
  const auto& names = a.matrix.approaches();
  json j;
  j["label"] = a.label;
  j["input"] = a.input;
  j["metric"] = a.metric;
  j["family"] = a.family;
  j["direction"] = to_string(a.matrix.direction());
  j["k"] = a.matrix.num_approaches();
  j["n_datasets"] = a.matrix.num_datasets();
  j["approaches"] = names;
  j["datasets"] = a.matrix.datasets();
  j["dropped_approaches"] = a.dropped_approaches;
  j["dropped_datasets"] = a.dropped_datasets;
  j["friedman"] = {{"statistic", a.friedman.statistic},
                   {"df", a.friedman.df},
                   {"p_value", a.friedman.p_value.value()},
                   {"significant", a.friedman.significant}};
  j["nemenyi"] = {{"alpha", a.nemenyi.alpha.value()},
                  {"k", a.nemenyi.k},
                  {"n_datasets", a.nemenyi.n_datasets},
                  {"q_alpha", a.nemenyi.q_alpha},
                  {"cd", a.nemenyi.cd}};
  j["mean_ranks"] = a.mean_ranks.values;

  if (a.corrected) {
    json order = json::array();
    for (auto i : a.corrected->order) order.push_back(names[i]);
    j["corrected"] = {{"order", order},
                      {"group_index", a.corrected->group_index},
                      {"rank_max", a.corrected->rank_max},
                      {"group_count", a.corrected->group_count()},
                      {"rankscore", a.corrected->rankscore}};
  }
  if (a.legacy) {
    j["legacy"] = {{"legacy_scale", a.legacy->legacy_scale},
                   {"three_rank", a.legacy->three_rank},
                   {"bucket_count", a.legacy->bucket_count()},
                   {"rankscore", a.legacy->rankscore()}};
  }
  if (a.comparison) {
    json changed = json::array();
    for (auto i : a.comparison->approaches_with_changed_bucket) changed.push_back(names[i]);
    json rows = json::array();
    for (std::size_t i = 0; i < a.comparison->rows.size(); ++i) {
      const auto& r = a.comparison->rows[i];
      rows.push_back({{"approach", names[i]},
                      {"legacy_bucket", r.legacy_bucket},
                      {"legacy_rankscore", r.legacy_rankscore},
                      {"corrected_group", r.corrected_group},
                      {"corrected_rankscore", r.corrected_rankscore}});
    }
    j["comparison"] = {{"group_count_corrected", a.comparison->group_count_corrected},
                       {"group_count_legacy", a.comparison->group_count_legacy},
                       {"approaches_with_changed_bucket", changed},
                       {"rows", rows}};
  }

  json pairs = json::array();
  for (const auto& p : a.pairwise) {
    pairs.push_back({{"a", names[p.i]},
                     {"b", names[p.j]},
                     {"rank_diff", p.rank_diff},
                     {"z", p.z},
                     {"z_prime", p.z_prime},
                     {"significant", p.significant}});
  }
  j["pairwise"] = std::move(pairs);
  j["warnings"] = a.warnings;
  return j;
}

inline nlohmann::json report_to_json(const Report& rep) {
  using nlohmann::json;
  json formats = json::array();
  for (auto f : rep.config.formats) formats.push_back(to_string(f));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = {{"alpha", rep.config.alpha},
                 {"direction", to_string(rep.config.direction)},
                 {"mode", to_string(rep.config.mode)},
                 {"missing", to_string(rep.config.missing)},
                 {"formats", formats},
                 {"diagram", rep.config.diagram_path.empty() ? json(nullptr) : json(rep.config.diagram_path)},
                 {"check_consistency", rep.config.check_consistency}};
  j["analyses"] = json::array();
  for (const auto& a : rep.analyses) j["analyses"].push_back(analysis_to_json(a));

  json approaches = json::array();
  for (const auto& a : rep.aggregate.approaches) {
    approaches.push_back({{"name", a.name}, {"family", a.family}, {"mean_rankscore", a.mean_rankscore}, {"analyses", a.analyses}});
  }
  json best = json::array();
  for (const auto& b : rep.aggregate.best_variants) {
    best.push_back({{"family", b.family}, {"variant", b.variant}, {"mean_rankscore", b.mean_rankscore}});
  }
  j["aggregate"] = {{"approaches", approaches}, {"best_variants", best}, {"warnings", rep.aggregate.warnings}};
  j["findings"] = json::array();
  for (const auto& f : rep.findings) j["findings"].push_back(finding_to_json(f));
  return j;
}

// One row per (analysis, approach).
inline std::string report_to_csv(const Report& rep) {
  std::string out =
      "analysis,metric,family,approach,mean_rank,corrected_group,corrected_rankscore,legacy_bucket,legacy_rankscore,"
      "alpha,k,n_datasets,q_alpha,cd,friedman_statistic,friedman_p\n";
  for (const auto& a : rep.analyses) {
    const auto legacy_scores = a.legacy ? a.legacy->rankscore() : std::vector<double>{};
    for (std::size_t i = 0; i < a.matrix.num_approaches(); ++i) {
      out += csv::quote(a.label) + "," + csv::quote(a.metric) + "," + csv::quote(a.family) + "," +
             csv::quote(a.matrix.approaches()[i]) + "," + format_g6(a.mean_ranks[i]) + ",";
      out += a.corrected ? std::to_string(a.corrected->group_index[i]) + "," + format_g6(a.corrected->rankscore[i]) : ",";
      out += ",";
      out += a.legacy ? std::to_string(a.legacy->three_rank[i]) + "," + format_g6(legacy_scores[i]) : ",";
      out += "," + format_g6(a.nemenyi.alpha) + "," + std::to_string(a.nemenyi.k) + "," +
             std::to_string(a.nemenyi.n_datasets) + "," + format_g6(a.nemenyi.q_alpha) + "," + format_g6(a.nemenyi.cd) +
             "," + format_g6(a.friedman.statistic) + "," + format_g6(a.friedman.p_value) + "\n";
    }
  }
  return out;
}

inline std::string report_to_markdown(const Report& rep) {
  std::string out = "# Rank analysis\n\n";
  out += "alpha = " + format_g6(rep.config.alpha) + ", mode = " + to_string(rep.config.mode) +
         ", missing = " + to_string(rep.config.missing) + "\n\n";
  for (const auto& a : rep.analyses) {
    out += "## " + a.label + "\n\n";
    out += "| k | N | Friedman chi2 | p | q_alpha | CD |\n|---|---|---|---|---|---|\n";
    out += "| " + std::to_string(a.nemenyi.k) + " | " + std::to_string(a.nemenyi.n_datasets) + " | " +
           format_g6(a.friedman.statistic) + " | " + format_g6(a.friedman.p_value) + " | " +
           format_g6(a.nemenyi.q_alpha) + " | " + format_g6(a.nemenyi.cd) + " |\n\n";
    for (const auto& w : a.warnings) out += "> " + w + "\n";
    if (!a.warnings.empty()) out += "\n";

    out += "| approach | mean rank |";
    if (a.corrected) out += " group | rankscore |";
    if (a.legacy) out += " legacy bucket | legacy rankscore |";
    out += "\n|---|---|";
    if (a.corrected) out += "---|---|";
    if (a.legacy) out += "---|---|";
    out += "\n";
    const auto order = a.corrected ? a.corrected->order : sort_by_mean_rank(a.mean_ranks, a.matrix.approaches());
    const auto legacy_scores = a.legacy ? a.legacy->rankscore() : std::vector<double>{};
    for (auto i : order) {
      out += "| " + a.matrix.approaches()[i] + " | " + format_g6(a.mean_ranks[i]) + " |";
      if (a.corrected) out += " " + std::to_string(a.corrected->group_index[i]) + " | " + format_g6(a.corrected->rankscore[i]) + " |";
      if (a.legacy) out += " " + std::to_string(a.legacy->three_rank[i]) + " | " + format_g6(legacy_scores[i]) + " |";
      out += "\n";
    }
    out += "\n";
  }

  out += "## Aggregate\n\n| approach | mean rankscore | analyses |\n|---|---|---|\n";
  for (const auto& a : rep.aggregate.approaches) {
    out += "| " + a.name + " | " + format_g6(a.mean_rankscore) + " | " + std::to_string(a.analyses) + " |\n";
  }
  out += "\n| family | best variant | mean rankscore |\n|---|---|---|\n";
  for (const auto& b : rep.aggregate.best_variants) {
    out += "| " + b.family + " | " + b.variant + " | " + format_g6(b.mean_rankscore) + " |\n";
  }
  if (!rep.findings.empty()) {
    out += "\n## Findings\n\n";
    for (const auto& f : rep.findings) {
      out += "- [" + f.analysis + ", " + f.mode + "] " + f.finding.better_mean_approach + " has the better mean (+" +
             format_g6(f.finding.mean_delta) + ") but a lower rankscore than " + f.finding.worse_mean_approach + " (" +
             format_g6(f.finding.rankscore_delta) + ")" + (f.finding.dominated ? ", despite winning on every dataset" : "") +
             "\n";
    }
  }
  return out;
}

inline std::string render_report(const Report& rep, ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return report_to_json(rep).dump(2) + "\n";
    case ReportFormat::Csv: return report_to_csv(rep);
    case ReportFormat::Markdown: return report_to_markdown(rep);
  }
  return {};
}

}  // namespace cdrank
