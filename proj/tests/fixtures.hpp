#pragma once

#include <string_view>

namespace fixtures {

// Found by find_pitfall_fixture (seed 1, trial 30). B has a higher mean than A
// (0.50 vs 0.48) but a lower mean rank (1.9 vs 2.6). All gaps are below the CD,
// so the corrected grouping is a single group, while on the compressed z' scale
// A lands in the top bucket and B in the bottom one.
inline constexpr std::string_view kLegacyPitfallCsv =
    "dataset,A,B,C\n"
    "d1,0.6,1,0.5\n"
    "d2,0.65,0.55,0.55\n"
    "d3,0.2,0.15,0\n"
    "d4,0.6,0.5,0.4\n"
    "d5,0.35,0.3,0.65\n";

}  // namespace fixtures
