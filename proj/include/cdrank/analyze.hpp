#pragma once

// End-to-end driver behind `cdrank analyze`: read every input table, analyse
// each one (concurrently), aggregate rankscores, and write reports and
// diagrams. Files are written once at the end via temp-file + rename.

#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cdrank/aggregate.hpp"
#include "cdrank/analysis.hpp"
#include "cdrank/report.hpp"
#include "cdrank/svg.hpp"

namespace cdrank {

enum ExitCode : int { kExitOk = 0, kExitDataError = 1, kExitAnalysisError = 2, kExitNumericError = 3 };

struct AnalyzeConfig {
  Probability alpha{0.05};
  Direction direction = Direction::HigherIsBetter;
  Mode mode = Mode::Corrected;
  MissingPolicy missing = MissingPolicy::Error;
  std::vector<ReportFormat> formats{ReportFormat::Json};
  std::optional<std::filesystem::path> diagram_path;
  std::optional<std::filesystem::path> output_dir;  // reports go to stdout when unset
  std::optional<std::filesystem::path> family_map;
  bool check_consistency = false;
};

// Input file stems "<family>_<metric>" name the dataset family and metric; a
// stem without '_' is used for both.
struct InputLabel {
  std::string label;
  std::string family;
  std::string metric;
};

inline InputLabel label_for(const std::filesystem::path& p) {
  const std::string stem = p.stem().string();
  const auto cut = stem.rfind('_');
  if (cut == std::string::npos || cut == 0 || cut + 1 == stem.size()) return {stem, stem, stem};
  return {stem, stem.substr(0, cut), stem.substr(cut + 1)};
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw DataError("cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file_atomic(const std::filesystem::path& p, const std::string& content) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  const auto tmp = std::filesystem::path(p.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw DataError("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, p);
}

inline std::filesystem::path diagram_path_for(const std::filesystem::path& base, const std::string& label, std::size_t count) {
  if (count <= 1) return base;
  auto p = base;
  p.replace_filename(base.stem().string() + "-" + label + base.extension().string());
  return p;
}

/// Runs the whole analysis and returns the report. Throws the cdrank error types.
inline Report build_report(const AnalyzeConfig& cfg, const std::vector<std::filesystem::path>& inputs) {
  if (inputs.empty()) throw DataError("no input files");

  FamilyMap families;
  if (cfg.family_map) families = parse_family_map(read_file(*cfg.family_map));

  std::vector<std::string> texts;
  texts.reserve(inputs.size());
  for (const auto& p : inputs) texts.push_back(read_file(p));

  const AnalysisOptions opt{cfg.alpha, cfg.mode, cfg.missing};
  std::vector<std::future<AnalysisResult>> jobs;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      const InputLabel lbl = label_for(inputs[i]);
      try {
        auto m = parse_results_csv(texts[i], cfg.direction, lbl.metric);
        auto r = analyze_matrix(m, opt, lbl.label, lbl.family);
        r.input = inputs[i].string();
        return r;
      } catch (const ParseError& e) {
        throw ParseError(inputs[i].string() + ": " + e.what(), e.line(), e.column());
      } catch (const DataError& e) {
        throw DataError(inputs[i].string() + ": " + e.what());
      } catch (const AnalysisError& e) {
        throw AnalysisError(inputs[i].string() + ": " + e.what());
      }
    }));
  }

  Report rep;
  rep.config = {cfg.alpha, cfg.direction, cfg.mode, cfg.missing, cfg.formats,
                cfg.diagram_path ? cfg.diagram_path->string() : std::string{}, cfg.check_consistency};
  // get() in input order so the first failing input determines the error.
  for (auto& j : jobs) rep.analyses.push_back(j.get());

  std::vector<AnalysisScores> scores;
  std::vector<std::string> known;
  for (const auto& a : rep.analyses) {
    scores.push_back({a.metric, a.family, a.matrix.approaches(), a.primary_rankscore()});
    known.insert(known.end(), a.dropped_approaches.begin(), a.dropped_approaches.end());
    rep.findings.insert(rep.findings.end(), a.findings.begin(), a.findings.end());
  }
  rep.aggregate = aggregate_rankscores(scores, families, known);
  return rep;
}

/// CLI entry point. Reports go to `out` (or files under output_dir), diagnostics to `err`.
inline int run_analyze(const AnalyzeConfig& cfg, const std::vector<std::filesystem::path>& inputs, std::ostream& out,
                       std::ostream& err) {
  try {
    const Report rep = build_report(cfg, inputs);

    for (const auto& a : rep.analyses) {
      for (const auto& w : a.warnings) err << "warning: " << a.label << ": " << w << "\n";
    }
    for (const auto& w : rep.aggregate.warnings) err << "warning: " << w << "\n";

    bool hard_violation = false;
    if (cfg.check_consistency) {
      for (const auto& f : rep.findings) {
        const bool hard = f.finding.dominated && f.mode == "corrected";
        hard_violation = hard_violation || hard;
        err << (hard ? "error: " : "warning: ") << f.analysis << " (" << f.mode << "): " << f.finding.better_mean_approach
            << " has a better mean but a lower rankscore than " << f.finding.worse_mean_approach
            << (f.finding.dominated ? " although it wins on every dataset" : "") << "\n";
      }
    }

    std::vector<std::pair<std::filesystem::path, std::string>> files;
    if (cfg.diagram_path) {
      for (const auto& a : rep.analyses) {
        if (!a.corrected) continue;
        files.emplace_back(diagram_path_for(*cfg.diagram_path, a.label, rep.analyses.size()),
                           render_cd_diagram(*a.corrected, a.mean_ranks, a.nemenyi, a.matrix.approaches()));
      }
      if (files.empty()) err << "warning: diagrams are drawn from the corrected grouping; none written in legacy mode\n";
    }
    for (auto f : cfg.formats) {
      std::string body = render_report(rep, f);
      if (cfg.output_dir) {
        files.emplace_back(*cfg.output_dir / (std::string("report") + file_extension(f)), std::move(body));
      } else {
        out << body;
      }
    }
    for (const auto& [path, body] : files) write_file_atomic(path, body);

    if (hard_violation) {
      err << "error: dominance violated in corrected mode\n";
      return kExitNumericError;
    }
    return kExitOk;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const AnalysisError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAnalysisError;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace cdrank
