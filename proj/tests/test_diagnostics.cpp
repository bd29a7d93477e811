#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cdrank/analysis.hpp"
#include "cdrank/csv.hpp"
#include "cdrank/diagnostics.hpp"
#include "fixtures.hpp"

using namespace cdrank;
using Catch::Approx;

namespace {

NemenyiParams fixed_cd(double cd, int k, int n) {
  return {Probability(0.05), k, n, cd / std::sqrt(k * (k + 1) / (6.0 * n)), cd};
}

std::vector<std::string> letters(int k) {
  std::vector<std::string> out;
  for (int j = 0; j < k; ++j) out.push_back(std::string(1, static_cast<char>('A' + j)));
  return out;
}

std::vector<std::string> dataset_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("d" + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("no findings when all approaches are identical", "[diagnostics]") {
  const auto m = ResultMatrix::from_rows(letters(4), dataset_names(3), {{1, 1, 1, 1}, {2, 2, 2, 2}, {0, 0, 0, 0}});
  const auto res = analyze_matrix(m, {Probability(0.05), Mode::Both, MissingPolicy::Error});
  CHECK(res.findings.empty());
}

TEST_CASE("detect_inconsistencies rejects mismatched approach sets", "[diagnostics]") {
  const auto m = ResultMatrix::from_rows(letters(3), dataset_names(2), {{1, 2, 3}, {3, 2, 1}});
  const std::vector<double> scores{1.0, 0.5};
  CHECK_THROWS_AS(detect_inconsistencies(m, scores), AnalysisError);
}

TEST_CASE("legacy pitfall fixture", "[diagnostics]") {
  const auto m = parse_results_csv(fixtures::kLegacyPitfallCsv);
  const auto res = analyze_matrix(m, {Probability(0.05), Mode::Both, MissingPolicy::Error});
  CHECK(res.mean_ranks.values == std::vector<double>{2.6, 1.9, 1.5});
  REQUIRE(res.corrected);
  CHECK(res.corrected->group_count() == 1);
  REQUIRE(res.legacy);
  CHECK(res.legacy->three_rank == std::vector<int>{1, 3, 3});

  std::vector<TaggedFinding> legacy, corrected;
  for (const auto& f : res.findings) (f.mode == "legacy" ? legacy : corrected).push_back(f);
  REQUIRE(legacy.size() == 1);
  CHECK(legacy[0].finding.better_mean_approach == "B");
  CHECK(legacy[0].finding.worse_mean_approach == "A");
  CHECK(legacy[0].finding.mean_delta == Approx(0.02));
  CHECK(legacy[0].finding.rankscore_delta == -1.0);
  CHECK_FALSE(legacy[0].finding.dominated);
  CHECK(corrected.empty());
}

TEST_CASE("findings respect lower-is-better metrics", "[diagnostics]") {
  // Error rates: A is lower on average but worse on most datasets.
  const auto m = ResultMatrix::from_rows({"A", "B"}, dataset_names(3), {{0.0, 0.9}, {0.5, 0.4}, {0.5, 0.4}},
                                         Direction::LowerIsBetter);
  const std::vector<double> scores{0.0, 1.0};
  const auto f = detect_inconsistencies(m, scores);
  REQUIRE(f.size() == 1);
  CHECK(f[0].better_mean_approach == "A");
  CHECK(f[0].mean_delta == Approx(0.7 / 3.0));
  CHECK_FALSE(f[0].dominated);
}

TEST_CASE("dominated pairs never invert in corrected mode", "[diagnostics][property]") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> kd(2, 10), nd(2, 20);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = kd(rng), n = nd(rng);
    std::vector<std::vector<double>> rows(n, std::vector<double>(k));
    for (auto& r : rows)
      for (auto& x : r) x = u(rng);
    std::uniform_int_distribution<int> pick(0, k - 1);
    const int a = pick(rng);
    int b = pick(rng);
    while (b == a) b = pick(rng);
    for (auto& r : rows) r[a] = r[b] + 0.01 + 0.5 * u(rng);
    const auto m = ResultMatrix::from_rows(letters(k), dataset_names(n), rows);
    REQUIRE(strictly_dominates(m, a, b));

    const auto res = analyze_matrix(m, {Probability(0.05), Mode::Corrected, MissingPolicy::Error});
    CHECK(res.corrected->rankscore[a] >= res.corrected->rankscore[b]);
    for (const auto& f : res.findings) CHECK_FALSE(f.finding.dominated);
  }
}

TEST_CASE("detector is sound and complete against a double loop", "[diagnostics][property]") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> kd(2, 6), nd(2, 5), val(0, 4);
  std::uniform_int_distribution<int> score(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = kd(rng), n = nd(rng);
    std::vector<std::vector<double>> rows(n, std::vector<double>(k));
    for (auto& r : rows)
      for (auto& x : r) x = val(rng);
    const auto m = ResultMatrix::from_rows(letters(k), dataset_names(n), rows);
    std::vector<double> rs(k);
    for (auto& s : rs) s = score(rng) / 2.0;

    std::vector<std::pair<int, int>> expected;
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        double mx = 0, my = 0;
        for (int i = 0; i < n; ++i) mx += rows[i][x], my += rows[i][y];
        if (mx > my && rs[x] < rs[y]) expected.emplace_back(x, y);
      }
    }
    const auto found = detect_inconsistencies(m, rs);
    REQUIRE(found.size() == expected.size());
    for (std::size_t f = 0; f < found.size(); ++f) {
      const auto [x, y] = expected[f];
      CHECK(found[f].better_mean_approach == letters(k)[x]);
      CHECK(found[f].worse_mean_approach == letters(k)[y]);
      CHECK(found[f].mean_delta > 0.0);
      CHECK(found[f].rankscore_delta < 0.0);
      bool dom = true;
      for (int i = 0; i < n; ++i) dom = dom && rows[i][x] > rows[i][y];
      CHECK(found[f].dominated == dom);
    }
  }
}

TEST_CASE("compare_modes on the four-approach fixture", "[diagnostics]") {
  const auto mc = compare_modes(MeanRanks{{5.0, 4.0, 2.5, 1.0}}, fixed_cd(1.2, 4, 10));
  CHECK(mc.group_count_corrected == 3);
  CHECK(mc.group_count_legacy == 3);
  CHECK(mc.approaches_with_changed_bucket == std::vector<std::size_t>{1});
  CHECK(mc.rows[1].legacy_bucket == 2);
  CHECK(mc.rows[1].corrected_group == 0);
  CHECK(mc.rows[1].corrected_rankscore == 1.0);
  CHECK(mc.rows[1].legacy_rankscore == 0.5);
}

TEST_CASE("compare_modes degenerate and k=135 cases", "[diagnostics]") {
  const auto flat = compare_modes(MeanRanks{{2, 2, 2}}, fixed_cd(0.5, 3, 10));
  CHECK(flat.group_count_corrected == 1);
  CHECK(flat.group_count_legacy == 1);
  CHECK(flat.approaches_with_changed_bucket.empty());

  std::vector<double> r;
  for (int level = 0; level < 5; ++level)
    for (int i = 0; i < 27; ++i) r.push_back(1.0 + 33.5 * level);
  const auto mc = compare_modes(MeanRanks{r}, critical_distance(Probability(0.05), 135, 62));
  CHECK(mc.group_count_legacy <= 3);
  CHECK(mc.group_count_corrected > 3);
}

TEST_CASE("legacy bucket count never exceeds three", "[diagnostics][property]") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(1.0, 40.0), cd(0.01, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> r(40);
    for (auto& x : r) x = u(rng);
    CHECK(legacy_three_rank(MeanRanks{r}, fixed_cd(cd(rng), 40, 10)).bucket_count() <= 3);
  }
}
