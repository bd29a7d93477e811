#pragma once

// One complete analysis of a single result table: ranks, Friedman test,
// Nemenyi parameters, groupings in the requested mode(s) and consistency
// findings.

#include <optional>
#include <string>
#include <vector>

#include "cdrank/csv.hpp"
#include "cdrank/diagnostics.hpp"
#include "cdrank/nemenyi.hpp"
#include "cdrank/ranking.hpp"

namespace cdrank {

enum class Mode { Corrected, Legacy, Both };

inline const char* to_string(Mode m) noexcept {
  switch (m) {
    case Mode::Corrected: return "corrected";
    case Mode::Legacy: return "legacy";
    case Mode::Both: return "both";
  }
  return "?";
}

inline bool includes_corrected(Mode m) noexcept { return m != Mode::Legacy; }
inline bool includes_legacy(Mode m) noexcept { return m != Mode::Corrected; }

struct TaggedFinding {
  std::string analysis;
  std::string mode;  // "corrected" or "legacy"
  InconsistencyFinding finding;
};

struct AnalysisResult {
  std::string label;
  std::string input;
  std::string metric;
  std::string family;
  ResultMatrix matrix;  // after the missing-data policy
  std::vector<std::string> dropped_approaches;
  std::vector<std::string> dropped_datasets;
  MeanRanks mean_ranks;
  FriedmanResult friedman;
  NemenyiParams nemenyi;
  std::vector<PairwiseComparison> pairwise;
  std::optional<Grouping> corrected;
  std::optional<LegacyRanks> legacy;
  std::optional<ModeComparison> comparison;
  std::vector<TaggedFinding> findings;
  std::vector<std::string> warnings;

  // Rankscores used for aggregation: corrected when available, legacy otherwise.
  std::vector<double> primary_rankscore() const {
    if (corrected) return corrected->rankscore;
    if (legacy) return legacy->rankscore();
    return {};
  }
};

struct AnalysisOptions {
  Probability alpha{0.05};
  Mode mode = Mode::Corrected;
  MissingPolicy missing = MissingPolicy::Error;
};

inline AnalysisResult analyze_matrix(const ResultMatrix& raw, const AnalysisOptions& opt, std::string label = {},
                                     std::string family = {}) {
  AnalysisResult r;
  r.label = std::move(label);
  r.metric = raw.metric_name();
  r.family = std::move(family);

  auto policy = apply_missing_policy(raw, opt.missing);
  r.matrix = std::move(policy.matrix);
  r.dropped_approaches = std::move(policy.dropped_approaches);
  r.dropped_datasets = std::move(policy.dropped_datasets);
  for (const auto& a : r.dropped_approaches) r.warnings.push_back("dropped approach '" + a + "' (missing values)");
  for (const auto& d : r.dropped_datasets) r.warnings.push_back("dropped dataset '" + d + "' (missing values)");

  const RankMatrix ranks = rank_matrix(r.matrix);
  r.mean_ranks = mean_ranks(ranks);
  r.friedman = friedman_test(ranks, opt.alpha);
  if (!r.friedman.significant) {
    r.warnings.push_back("Friedman test not significant (p = " + std::to_string(r.friedman.p_value.value()) +
                         "); post-hoc results reported for completeness");
  }
  const int k = static_cast<int>(r.matrix.num_approaches());
  const int n = static_cast<int>(r.matrix.num_datasets());
  r.nemenyi = critical_distance(opt.alpha, k, n);
  r.pairwise = pairwise_significance(r.mean_ranks, r.nemenyi);

  const auto& names = r.matrix.approaches();
  if (includes_corrected(opt.mode)) {
    r.corrected = group_by_cd(r.mean_ranks, r.nemenyi, names);
    for (auto& f : detect_inconsistencies(r.matrix, *r.corrected)) r.findings.push_back({r.label, "corrected", std::move(f)});
  }
  if (includes_legacy(opt.mode)) {
    r.legacy = legacy_three_rank(r.mean_ranks, r.nemenyi);
    for (auto& f : detect_inconsistencies(r.matrix, r.legacy->rankscore())) {
      r.findings.push_back({r.label, "legacy", std::move(f)});
    }
  }
  if (opt.mode == Mode::Both) r.comparison = compare_modes(r.mean_ranks, r.nemenyi, names);
  return r;
}

}  // namespace cdrank
