// Randomized search for a small result matrix on which the legacy three-bucket
// ranking ranks an approach with the better mean below one with a worse mean,
// while the corrected grouping does not. Prints the first hit as a CSV table.

#include <iostream>
#include <random>

#include "cdrank/analysis.hpp"
#include "cdrank/csv.hpp"

int main(int argc, char** argv) {
  using namespace cdrank;
  const unsigned long seed = argc > 1 ? std::stoul(argv[1]) : 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kd(3, 6), nd(2, 5), val(0, 20);
  for (int trial = 0; trial < 1000000; ++trial) {
    const int k = kd(rng), n = nd(rng);
    std::vector<std::string> approaches, datasets;
    for (int j = 0; j < k; ++j) approaches.push_back(std::string(1, static_cast<char>('A' + j)));
    for (int i = 0; i < n; ++i) datasets.push_back("d" + std::to_string(i + 1));
    std::vector<std::vector<double>> rows(n, std::vector<double>(k));
    for (auto& r : rows)
      for (auto& x : r) x = val(rng) / 20.0;
    const auto m = ResultMatrix::from_rows(approaches, datasets, rows);
    const auto res = analyze_matrix(m, {Probability(0.05), Mode::Both, MissingPolicy::Error});
    int legacy = 0, corrected = 0;
    for (const auto& f : res.findings) (f.mode == "legacy" ? legacy : corrected)++;
    if (legacy > 0 && corrected == 0) {
      std::cout << "# seed " << seed << " trial " << trial << "\n" << write_results_csv(m);
      return 0;
    }
  }
  return 1;
}
