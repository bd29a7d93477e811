#pragma once

// Consistency checks between raw metric means and rankscores, and a
// side-by-side comparison of the legacy and corrected rankings.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cdrank/error.hpp"
#include "cdrank/nemenyi.hpp"
#include "cdrank/ranking.hpp"

namespace cdrank {

// Approach `better_mean` has the better raw mean but the lower rankscore.
struct InconsistencyFinding {
  std::string better_mean_approach;
  std::string worse_mean_approach;
  double mean_delta = 0.0;       // > 0, in the "better" orientation of the metric
  double rankscore_delta = 0.0;  // < 0
  bool dominated = false;        // better_mean wins strictly on every dataset
};

struct ModeRow {
  int legacy_bucket = 0;
  int corrected_group = 0;
  double corrected_rankscore = 0.0;
  double legacy_rankscore = 0.0;
};

struct ModeComparison {
  int group_count_corrected = 0;
  int group_count_legacy = 0;
  std::vector<std::size_t> approaches_with_changed_bucket;  // legacy rankscore != corrected rankscore
  std::vector<ModeRow> rows;                                // per approach
};

/// Mean of each column, negated for lower-is-better metrics so that larger is always better.
inline std::vector<double> oriented_means(const ResultMatrix& m) {
  std::vector<double> means(m.num_approaches(), 0.0);
  for (std::size_t j = 0; j < m.num_approaches(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.num_datasets(); ++i) s += m.value(i, j);
    means[j] = s / static_cast<double>(m.num_datasets());
    if (m.direction() == Direction::LowerIsBetter) means[j] = -means[j];
  }
  return means;
}

inline bool strictly_dominates(const ResultMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.num_datasets(); ++i) {
    const double va = m.value(i, a);
    const double vb = m.value(i, b);
    const bool better = m.direction() == Direction::HigherIsBetter ? va > vb : va < vb;
    if (!better) return false;
  }
  return m.num_datasets() > 0;
}

inline std::vector<InconsistencyFinding> detect_inconsistencies(const ResultMatrix& m, std::span<const double> rankscore) {
  if (rankscore.size() != m.num_approaches()) {
    throw AnalysisError("detect_inconsistencies: rankscores cover " + std::to_string(rankscore.size()) +
                        " approaches, matrix has " + std::to_string(m.num_approaches()));
  }
  const auto means = oriented_means(m);
  std::vector<InconsistencyFinding> out;
  for (std::size_t a = 0; a < means.size(); ++a) {
    for (std::size_t b = 0; b < means.size(); ++b) {
      if (a == b || !(means[a] > means[b]) || !(rankscore[a] < rankscore[b])) continue;
      out.push_back({m.approaches()[a], m.approaches()[b], means[a] - means[b], rankscore[a] - rankscore[b],
                     strictly_dominates(m, a, b)});
    }
  }
  return out;
}

inline std::vector<InconsistencyFinding> detect_inconsistencies(const ResultMatrix& m, const Grouping& g) {
  return detect_inconsistencies(m, std::span<const double>(g.rankscore));
}

inline ModeComparison compare_modes(const MeanRanks& mr, const NemenyiParams& params,
                                    const std::vector<std::string>& names = {}) {
  const Grouping g = group_by_cd(mr, params, names);
  const LegacyRanks lr = legacy_three_rank(mr, params);
  const auto legacy_scores = lr.rankscore();

  ModeComparison mc;
  mc.group_count_corrected = g.group_count();
  mc.group_count_legacy = lr.bucket_count();
  mc.rows.resize(mr.size());
  for (std::size_t i = 0; i < mr.size(); ++i) {
    mc.rows[i] = {lr.three_rank[i], g.group_index[i], g.rankscore[i], legacy_scores[i]};
    if (legacy_scores[i] != g.rankscore[i]) mc.approaches_with_changed_bucket.push_back(i);
  }
  return mc;
}

}  // namespace cdrank
