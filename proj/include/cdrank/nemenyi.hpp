#pragma once

// Nemenyi post-hoc analysis: critical distance, pairwise comparisons,
// critical-distance gap grouping with normalized rankscores, and the legacy
// three-bucket ranking that operated on the compressed z' scale.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "cdrank/distributions.hpp"
#include "cdrank/error.hpp"
#include "cdrank/probability.hpp"
#include "cdrank/ranking.hpp"

namespace cdrank {

struct NemenyiParams {
  Probability alpha;
  int k = 0;
  int n_datasets = 0;
  double q_alpha = 0.0;  // studentized-range quantile at 1 - alpha, divided by sqrt(2)
  double cd = 0.0;
};

struct PairwiseComparison {
  std::size_t i = 0;
  std::size_t j = 0;
  double rank_diff = 0.0;
  double z = 0.0;
  double z_prime = 0.0;
  bool significant = false;
};

struct Grouping {
  std::vector<std::size_t> order;       // approach indices, best mean rank first
  std::vector<int> group_index;         // per approach; 0 is the best group
  int rank_max = 0;
  std::vector<double> rankscore;        // per approach, in [0, 1]

  int group_count() const noexcept { return rank_max + 1; }
};

struct LegacyRanks {
  std::vector<double> legacy_scale;     // per approach, z' distance from the worst approach
  std::vector<int> three_rank;          // per approach, 1 (top) .. 3 (bottom)

  int bucket_count() const {
    std::vector<int> b = three_rank;
    std::sort(b.begin(), b.end());
    return static_cast<int>(std::unique(b.begin(), b.end()) - b.begin());
  }

  // Normalized like the corrected rankscore: bucket 1 -> 1, 2 -> 0.5, 3 -> 0.
  std::vector<double> rankscore() const {
    std::vector<double> out(three_rank.size());
    std::transform(three_rank.begin(), three_rank.end(), out.begin(),
                   [](int r) { return 1.0 - (r - 1) / 2.0; });
    return out;
  }
};

namespace detail {

inline double rank_standard_error(int k, int n_datasets) {
  return std::sqrt(static_cast<double>(k) * (k + 1) / (6.0 * n_datasets));
}

}  // namespace detail

/// CD = qtukey(1 - alpha, k, inf) * sqrt(k (k + 1) / (12 N)).
inline NemenyiParams critical_distance(Probability alpha, int k, int n_datasets) {
  if (k < 2) throw AnalysisError("critical_distance: k must be >= 2");
  if (n_datasets < 2) throw AnalysisError("critical_distance: N must be >= 2");
  if (!(alpha.value() > 0.0 && alpha.value() < 1.0)) throw DomainError("critical_distance: alpha must be in (0, 1)");

  NemenyiParams p;
  p.alpha = alpha;
  p.k = k;
  p.n_datasets = n_datasets;
  p.q_alpha = dist::studentized_range_quantile(Probability(1.0 - alpha.value()), k) / std::numbers::sqrt2;
  p.cd = p.q_alpha * detail::rank_standard_error(k, n_datasets);
  return p;
}

inline double z_value(double r_i, double r_j, int k, int n_datasets) {
  return (r_i - r_j) / detail::rank_standard_error(k, n_datasets);
}

// The PSTAT entry that was mistaken for an average rank: |z| * sqrt(2).
inline double legacy_pstat(double r_i, double r_j, int k, int n_datasets) {
  return std::fabs(z_value(r_i, r_j, k, n_datasets)) * std::numbers::sqrt2;
}

inline std::vector<PairwiseComparison> pairwise_significance(const MeanRanks& mr, const NemenyiParams& params) {
  std::vector<PairwiseComparison> out;
  const std::size_t k = mr.size();
  out.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      PairwiseComparison c;
      c.i = i;
      c.j = j;
      c.rank_diff = mr[i] - mr[j];
      c.z = z_value(mr[i], mr[j], params.k, params.n_datasets);
      c.z_prime = std::fabs(c.z) * std::numbers::sqrt2;
      c.significant = std::fabs(c.rank_diff) > params.cd;
      out.push_back(c);
    }
  }
  return out;
}

/// Approach indices sorted by descending mean rank; equal means are ordered by name.
inline std::vector<std::size_t> sort_by_mean_rank(const MeanRanks& mr, const std::vector<std::string>& names) {
  std::vector<std::size_t> order(mr.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (mr[a] != mr[b]) return mr[a] > mr[b];
    if (!names.empty()) return names[a] < names[b];
    return a < b;
  });
  return order;
}

/// Groups approaches by walking the sorted mean ranks and opening a new group
/// whenever two neighbours are more than CD apart. rankscore = 1 - group / rank_max,
/// or 1 for everyone when there is a single group.
inline Grouping group_by_cd(const MeanRanks& mr, const NemenyiParams& params, const std::vector<std::string>& names = {}) {
  if (!names.empty() && names.size() != mr.size()) throw AnalysisError("group_by_cd: names/mean ranks size mismatch");
  Grouping g;
  g.order = sort_by_mean_rank(mr, names);
  g.group_index.assign(mr.size(), 0);
  g.rankscore.assign(mr.size(), 1.0);

  int current = 0;
  for (std::size_t p = 1; p < g.order.size(); ++p) {
    if (mr[g.order[p - 1]] - mr[g.order[p]] > params.cd) ++current;
    g.group_index[g.order[p]] = current;
  }
  g.rank_max = current;
  if (g.rank_max > 0) {
    for (std::size_t i = 0; i < mr.size(); ++i) {
      g.rankscore[i] = 1.0 - static_cast<double>(g.group_index[i]) / g.rank_max;
    }
  }
  return g;
}

/// Top bucket: within CD of the best legacy score. Bottom bucket: within CD of
/// the worst. Everything else is the middle bucket. The CD is compared against
/// z' distances, which is what made the original ranking so coarse.
inline LegacyRanks legacy_three_rank(const MeanRanks& mr, const NemenyiParams& params) {
  LegacyRanks lr;
  if (mr.size() == 0) return lr;
  const double worst_rank = *std::min_element(mr.values.begin(), mr.values.end());
  lr.legacy_scale.resize(mr.size());
  for (std::size_t i = 0; i < mr.size(); ++i) {
    lr.legacy_scale[i] = legacy_pstat(mr[i], worst_rank, params.k, params.n_datasets);
  }
  const double best = *std::max_element(lr.legacy_scale.begin(), lr.legacy_scale.end());
  const double worst = *std::min_element(lr.legacy_scale.begin(), lr.legacy_scale.end());
  lr.three_rank.resize(mr.size());
  for (std::size_t i = 0; i < mr.size(); ++i) {
    const double s = lr.legacy_scale[i];
    if (best - s <= params.cd) {
      lr.three_rank[i] = 1;
    } else if (s - worst <= params.cd) {
      lr.three_rank[i] = 3;
    } else {
      lr.three_rank[i] = 2;
    }
  }
  return lr;
}

}  // namespace cdrank
