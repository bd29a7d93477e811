#include <catch2/catch_amalgamated.hpp>

#include "cdrank/aggregate.hpp"

using namespace cdrank;
using Catch::Approx;

TEST_CASE("approach families", "[aggregate]") {
  CHECK(approach_family("CamargoCruz09-NB") == "CamargoCruz09");
  CHECK(approach_family("Panichella14-CODEP-BN") == "Panichella14-CODEP");
  CHECK(approach_family("Plain") == "Plain");
  CHECK(approach_family("-x") == "-x");
  const FamilyMap over{{"Panichella14-CODEP-BN", "Panichella14"}};
  CHECK(approach_family("Panichella14-CODEP-BN", over) == "Panichella14");

  const auto parsed = parse_family_map("approach,family\nPanichella14-CODEP-BN,Panichella14\n");
  CHECK(parsed.at("Panichella14-CODEP-BN") == "Panichella14");
  CHECK_THROWS_AS(parse_family_map("a,b,c\n"), ParseError);
}

TEST_CASE("single analysis aggregates to itself", "[aggregate]") {
  const std::vector<AnalysisScores> one{{"AUC", "RELINK", {"X-A", "Y-B"}, {1.0, 0.25}}};
  const auto rep = aggregate_rankscores(one);
  REQUIRE(rep.approaches.size() == 2);
  CHECK(rep.approaches[0].mean_rankscore == 1.0);
  CHECK(rep.approaches[1].mean_rankscore == 0.25);
}

TEST_CASE("unweighted mean across analyses", "[aggregate]") {
  const std::vector<AnalysisScores> four{{"AUC", "F1", {"A-x"}, {1.0}},
                                         {"MCC", "F1", {"A-x"}, {0.5}},
                                         {"AUC", "F2", {"A-x"}, {0.75}},
                                         {"MCC", "F2", {"A-x"}, {0.9}}};
  const auto rep = aggregate_rankscores(four);
  CHECK(rep.approaches.at(0).mean_rankscore == Approx(0.7875).margin(1e-12));
  CHECK(rep.approaches.at(0).analyses == 4);
}

TEST_CASE("best variant per family", "[aggregate]") {
  const std::vector<AnalysisScores> a{{"AUC", "F", {"CamargoCruz09-NB", "CamargoCruz09-DT", "CV-RF", "CV-NET"}, {0.917, 0.88, 0.5, 0.5}}};
  const auto rep = aggregate_rankscores(a);
  REQUIRE(rep.best_variants.size() == 2);
  CHECK(rep.best_variants[0].family == "CV");
  CHECK(rep.best_variants[0].variant == "CV-NET");  // tie broken lexicographically
  CHECK(rep.best_variants[1].family == "CamargoCruz09");
  CHECK(rep.best_variants[1].variant == "CamargoCruz09-NB");
  CHECK(rep.best_variants[1].mean_rankscore == Approx(0.917));
}

TEST_CASE("aggregation warnings and bounds", "[aggregate]") {
  const std::vector<AnalysisScores> a{{"AUC", "F", {"A", "B"}, {1.0, 0.0}}, {"MCC", "F", {"A"}, {0.5}}};
  const auto rep = aggregate_rankscores(a, {}, {"Nam13-NB"});
  REQUIRE(rep.warnings.size() == 1);
  CHECK(rep.warnings[0].find("Nam13-NB") != std::string::npos);
  CHECK(rep.approaches.size() == 2);
  CHECK(rep.approaches[0].mean_rankscore == 0.75);
  CHECK(rep.approaches[1].analyses == 1);
  for (const auto& x : rep.approaches) CHECK((x.mean_rankscore >= 0.0 && x.mean_rankscore <= 1.0));
  CHECK_THROWS_AS(aggregate_rankscores(std::vector<AnalysisScores>{}), AnalysisError);
}
