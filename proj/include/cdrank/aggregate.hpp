#pragma once

// Averaging rankscores over (metric x dataset-family) analyses and picking
// the best variant of each approach family.

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdrank/csv.hpp"
#include "cdrank/error.hpp"

namespace cdrank {

// Rankscores produced by one analysis (one metric on one dataset family).
struct AnalysisScores {
  std::string metric;
  std::string family;
  std::vector<std::string> approaches;
  std::vector<double> rankscore;
};

struct ApproachAggregate {
  std::string name;
  std::string family;
  double mean_rankscore = 0.0;
  std::size_t analyses = 0;
};

struct BestVariant {
  std::string family;
  std::string variant;
  double mean_rankscore = 0.0;
};

struct AggregateReport {
  std::vector<ApproachAggregate> approaches;  // sorted by name
  std::vector<BestVariant> best_variants;     // sorted by family
  std::vector<std::string> warnings;
};

using FamilyMap = std::map<std::string, std::string, std::less<>>;

/// "CamargoCruz09-NB" -> "CamargoCruz09". Names without a hyphen are their own family.
inline std::string approach_family(std::string_view approach, const FamilyMap& overrides = {}) {
  if (auto it = overrides.find(approach); it != overrides.end()) return it->second;
  const auto cut = approach.rfind('-');
  if (cut == std::string_view::npos || cut == 0) return std::string(approach);
  return std::string(approach.substr(0, cut));
}

// Two-column CSV "approach,family"; an optional header row "approach,family" is skipped.
inline FamilyMap parse_family_map(std::string_view text) {
  FamilyMap map;
  const auto records = csv::split_records(text);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != 2) throw ParseError("family map rows need exactly 2 cells", rec.line, 0);
    const auto approach = csv::content(rec.fields[0]);
    const auto family = csv::content(rec.fields[1]);
    if (r == 0 && approach == "approach" && family == "family") continue;
    if (approach.empty() || family.empty()) throw ParseError("empty approach or family", rec.line, 0);
    map[std::string(approach)] = std::string(family);
  }
  return map;
}

/// Unweighted mean of each approach's rankscores over all analyses it appears in.
/// `known_approaches` lists names expected in the output; any that appear in no
/// analysis are excluded with a warning.
inline AggregateReport aggregate_rankscores(std::span<const AnalysisScores> analyses, const FamilyMap& overrides = {},
                                            const std::vector<std::string>& known_approaches = {}) {
  if (analyses.empty()) throw AnalysisError("aggregate_rankscores: no completed analyses");

  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (const auto& a : analyses) {
    if (a.approaches.size() != a.rankscore.size()) throw AnalysisError("aggregate_rankscores: size mismatch");
    for (std::size_t i = 0; i < a.approaches.size(); ++i) {
      auto& [sum, count] = sums[a.approaches[i]];
      sum += a.rankscore[i];
      ++count;
    }
  }

  AggregateReport rep;
  std::vector<std::string> known = known_approaches;
  std::sort(known.begin(), known.end());
  known.erase(std::unique(known.begin(), known.end()), known.end());
  for (const auto& name : known) {
    if (!sums.contains(name)) rep.warnings.push_back("approach '" + name + "' appears in no completed analysis; excluded");
  }
  for (const auto& [name, sc] : sums) {
    rep.approaches.push_back({name, approach_family(name, overrides), sc.first / static_cast<double>(sc.second), sc.second});
  }

  // Approaches are sorted by name, so the first maximum is also the lexicographically smallest.
  std::map<std::string, BestVariant> best;
  for (const auto& a : rep.approaches) {
    auto it = best.find(a.family);
    if (it == best.end()) {
      best.emplace(a.family, BestVariant{a.family, a.name, a.mean_rankscore});
    } else if (a.mean_rankscore > it->second.mean_rankscore) {
      it->second = {a.family, a.name, a.mean_rankscore};
    }
  }
  for (auto& [_, b] : best) rep.best_variants.push_back(std::move(b));
  return rep;
}

}  // namespace cdrank
