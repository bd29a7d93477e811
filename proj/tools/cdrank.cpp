// cdrank: Friedman / Nemenyi ranking of approaches across benchmark datasets.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdrank/analyze.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rank competing approaches across benchmark datasets (Friedman + Nemenyi)"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyse one or more result tables");
  std::vector<std::string> inputs;
  double alpha = 0.05;
  cdrank::AnalyzeConfig cfg;
  std::vector<cdrank::ReportFormat> formats;
  std::string diagram, output_dir, family_map;

  const std::map<std::string, cdrank::Direction> directions{{"higher", cdrank::Direction::HigherIsBetter},
                                                            {"lower", cdrank::Direction::LowerIsBetter}};
  const std::map<std::string, cdrank::Mode> modes{
      {"corrected", cdrank::Mode::Corrected}, {"legacy", cdrank::Mode::Legacy}, {"both", cdrank::Mode::Both}};
  const std::map<std::string, cdrank::MissingPolicy> policies{{"error", cdrank::MissingPolicy::Error},
                                                              {"drop-approach", cdrank::MissingPolicy::DropApproach},
                                                              {"drop-dataset", cdrank::MissingPolicy::DropDataset}};
  const std::map<std::string, cdrank::ReportFormat> format_names{{"json", cdrank::ReportFormat::Json},
                                                                 {"csv", cdrank::ReportFormat::Csv},
                                                                 {"markdown", cdrank::ReportFormat::Markdown}};

  analyze->add_option("--input,-i", inputs, "Result CSV files (<family>_<metric>.csv)")->required()->check(CLI::ExistingFile);
  analyze->add_option("--alpha", alpha, "Significance level, e.g. 0.05 (the quantile used is 1 - alpha)")
      ->check(CLI::Range(0.0, 1.0).description("(0, 1)"))
      ->capture_default_str();
  analyze->add_option("--direction", cfg.direction, "Metric direction: higher|lower")
      ->transform(CLI::CheckedTransformer(directions, CLI::ignore_case));
  analyze->add_option("--mode", cfg.mode, "Ranking mode: corrected|legacy|both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  analyze->add_option("--missing", cfg.missing, "Missing-data policy: error|drop-approach|drop-dataset")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
  analyze->add_option("--format", formats, "Report format(s): json|csv|markdown (repeatable)")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  analyze->add_option("--diagram", diagram, "Write a critical-difference diagram (SVG)");
  analyze->add_option("--output-dir,-o", output_dir, "Write report.<ext> files here instead of stdout");
  analyze->add_option("--family-map", family_map, "CSV 'approach,family' overriding the Family-VARIANT convention")
      ->check(CLI::ExistingFile);
  analyze->add_flag("--check-consistency", cfg.check_consistency,
                    "Print mean-vs-rankscore inversions; exit 3 on a dominance violation in corrected mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cdrank::kExitDataError;
  }

  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::cerr << "error: --alpha must be strictly between 0 and 1\n";
    return cdrank::kExitDataError;
  }
  cfg.alpha = cdrank::Probability(alpha);
  if (!formats.empty()) cfg.formats = formats;
  if (!diagram.empty()) cfg.diagram_path = diagram;
  if (!output_dir.empty()) cfg.output_dir = output_dir;
  if (!family_map.empty()) cfg.family_map = family_map;

  std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
  return cdrank::run_analyze(cfg, paths, std::cout, std::cerr);
}
