#pragma once

// Result matrices, per-dataset mid-rank transform, average ranks and the
// Friedman omnibus test. Ranks are oriented so that the best approach in a
// dataset receives rank k and the worst rank 1.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "cdrank/distributions.hpp"
#include "cdrank/error.hpp"
#include "cdrank/probability.hpp"

namespace cdrank {

enum class Direction { HigherIsBetter, LowerIsBetter };

inline const char* to_string(Direction d) noexcept {
  return d == Direction::HigherIsBetter ? "higher" : "lower";
}

// Performance values, one row per dataset and one column per approach.
// A cell may be missing until a missing-data policy has been applied.
class ResultMatrix {
public:
  using Cell = std::optional<double>;

  ResultMatrix() = default;

  ResultMatrix(std::vector<std::string> approaches, std::vector<std::string> datasets, std::vector<Cell> cells,
               Direction direction = Direction::HigherIsBetter, std::string metric_name = {})
      : approaches_(std::move(approaches)),
        datasets_(std::move(datasets)),
        cells_(std::move(cells)),
        direction_(direction),
        metric_name_(std::move(metric_name)) {
    if (cells_.size() != approaches_.size() * datasets_.size()) {
      throw DataError("result matrix: expected " + std::to_string(approaches_.size() * datasets_.size()) +
                      " cells, got " + std::to_string(cells_.size()));
    }
    require_unique(approaches_, "approach");
    require_unique(datasets_, "dataset");
    for (std::size_t i = 0; i < datasets_.size(); ++i) {
      for (std::size_t j = 0; j < approaches_.size(); ++j) {
        const Cell& c = cells_[i * approaches_.size() + j];
        if (c && !std::isfinite(*c)) {
          throw DataError("non-finite value for dataset '" + datasets_[i] + "', approach '" + approaches_[j] + "'");
        }
      }
    }
  }

  // Convenience for complete matrices given as rows.
  static ResultMatrix from_rows(std::vector<std::string> approaches, std::vector<std::string> datasets,
                                const std::vector<std::vector<double>>& rows,
                                Direction direction = Direction::HigherIsBetter, std::string metric_name = {}) {
    std::vector<Cell> cells;
    for (const auto& row : rows) {
      if (row.size() != approaches.size()) throw DataError("result matrix: ragged row");
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return ResultMatrix(std::move(approaches), std::move(datasets), std::move(cells), direction,
                        std::move(metric_name));
  }

  std::size_t num_approaches() const noexcept { return approaches_.size(); }
  std::size_t num_datasets() const noexcept { return datasets_.size(); }
  const std::vector<std::string>& approaches() const noexcept { return approaches_; }
  const std::vector<std::string>& datasets() const noexcept { return datasets_; }
  Direction direction() const noexcept { return direction_; }
  const std::string& metric_name() const noexcept { return metric_name_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  const Cell& cell(std::size_t dataset, std::size_t approach) const { return cells_.at(dataset * num_approaches() + approach); }

  // Only valid on complete matrices.
  double value(std::size_t dataset, std::size_t approach) const {
    const Cell& c = cell(dataset, approach);
    if (!c) throw DataError("missing value for dataset '" + datasets_[dataset] + "', approach '" + approaches_[approach] + "'");
    return *c;
  }

  bool is_complete() const noexcept {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.has_value(); });
  }

  std::vector<double> row(std::size_t dataset) const {
    std::vector<double> out(num_approaches());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = value(dataset, j);
    return out;
  }

  std::vector<double> column(std::size_t approach) const {
    std::vector<double> out(num_datasets());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = value(i, approach);
    return out;
  }

private:
  static void require_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) throw DataError(std::string("duplicate ") + what + " identifier '" + n + "'");
    }
  }

  std::vector<std::string> approaches_;
  std::vector<std::string> datasets_;
  std::vector<Cell> cells_;
  Direction direction_ = Direction::HigherIsBetter;
  std::string metric_name_;
};

// Per-dataset ranks, row-major N x k.
struct RankMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> ranks;

  double at(std::size_t i, std::size_t j) const { return ranks[i * cols + j]; }
  std::span<const double> row(std::size_t i) const { return {ranks.data() + i * cols, cols}; }
};

// Average rank R_i per approach; higher is better.
struct MeanRanks {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

struct FriedmanResult {
  double statistic = 0.0;
  int df = 0;
  Probability p_value;
  bool significant = false;
};

/// Mid-ranks of one dataset's values. The best value receives rank k.
inline std::vector<double> rank_row(std::span<const double> values, Direction direction) {
  const std::size_t k = values.size();
  if (k < 2) throw AnalysisError("rank_row: need at least 2 values");
  for (std::size_t j = 0; j < k; ++j) {
    if (!std::isfinite(values[j])) throw DataError("rank_row: non-finite value at position " + std::to_string(j));
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  // Worst first, so position p (0-based) maps to rank p + 1.
  const auto worse = [&](std::size_t a, std::size_t b) {
    return direction == Direction::HigherIsBetter ? values[a] < values[b] : values[a] > values[b];
  };
  std::stable_sort(order.begin(), order.end(), worse);

  std::vector<double> ranks(k);
  std::size_t start = 0;
  while (start < k) {
    std::size_t end = start + 1;
    while (end < k && values[order[end]] == values[order[start]]) ++end;
    // Positions start..end-1 share the mean of ranks start+1..end.
    const double mid = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t p = start; p < end; ++p) ranks[order[p]] = mid;
    start = end;
  }
  return ranks;
}

inline RankMatrix rank_matrix(const ResultMatrix& m) {
  RankMatrix rm{m.num_datasets(), m.num_approaches(), {}};
  rm.ranks.reserve(rm.rows * rm.cols);
  for (std::size_t i = 0; i < m.num_datasets(); ++i) {
    const auto ranks = rank_row(m.row(i), m.direction());
    rm.ranks.insert(rm.ranks.end(), ranks.begin(), ranks.end());
  }
  return rm;
}

inline MeanRanks mean_ranks(const RankMatrix& rm) {
  MeanRanks out{std::vector<double>(rm.cols, 0.0)};
  for (std::size_t i = 0; i < rm.rows; ++i) {
    for (std::size_t j = 0; j < rm.cols; ++j) out.values[j] += rm.at(i, j);
  }
  for (double& v : out.values) v /= static_cast<double>(rm.rows);
  return out;
}

/// Friedman chi-square statistic with the usual tie correction
///   chi2 = 12 / (N k (k+1)) * sum_j (S_j - N(k+1)/2)^2  /  (1 - sum(t^3 - t) / (N (k^3 - k)))
/// where S_j are column rank sums and t the sizes of tie groups within rows.
inline FriedmanResult friedman_test(const RankMatrix& rm, Probability alpha) {
  const std::size_t n = rm.rows;
  const std::size_t k = rm.cols;
  if (k < 2 || n < 2) {
    throw AnalysisError("friedman_test: need k >= 2 approaches and N >= 2 datasets (k = " + std::to_string(k) +
                        ", N = " + std::to_string(n) + ")");
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);

  std::vector<double> sums(k, 0.0);
  double ties = 0.0;
  std::vector<double> sorted(k);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = rm.row(i);
    for (std::size_t j = 0; j < k; ++j) sums[j] += row[j];
    sorted.assign(row.begin(), row.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < k;) {
      std::size_t b = a + 1;
      while (b < k && sorted[b] == sorted[a]) ++b;
      const double t = static_cast<double>(b - a);
      ties += t * t * t - t;
      a = b;
    }
  }

  const double expected = nd * (kd + 1.0) / 2.0;
  double ss = 0.0;
  for (double s : sums) ss += (s - expected) * (s - expected);

  FriedmanResult r;
  r.df = static_cast<int>(k) - 1;
  const double correction = 1.0 - ties / (nd * (kd * kd * kd - kd));
  if (correction <= 0.0) {
    // Every row is a single tie group: no information.
    r.statistic = 0.0;
  } else {
    r.statistic = 12.0 * ss / (nd * kd * (kd + 1.0)) / correction;
  }
  r.p_value = dist::chi_square_sf(r.statistic, r.df);
  r.significant = r.p_value < alpha;
  return r;
}

inline FriedmanResult friedman_test(const ResultMatrix& m, Probability alpha) {
  if (m.num_approaches() < 2 || m.num_datasets() < 2) {
    throw AnalysisError("friedman_test: need k >= 2 approaches and N >= 2 datasets");
  }
  if (!m.is_complete()) throw AnalysisError("friedman_test: result matrix has missing cells");
  return friedman_test(rank_matrix(m), alpha);
}

}  // namespace cdrank
