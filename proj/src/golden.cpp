#include "design_forge/golden.hpp"

namespace design_forge {

const std::vector<GoldenExample>& golden_examples() {
  static const std::vector<GoldenExample> examples{
      {"3.3", CodeSpec::c1(3), 64, 19, 16,
       {{0, 1}, {16, 252}, {24, 37632}, {28, 107520}, {32, 233478}, {36, 107520}, {40, 37632}, {48, 252}, {64, 1}},
       2,
       {{16, 15}, {24, 5152}, {28, 20160}, {32, 57443}, {36, 33600}, {40, 14560}, {48, 141}}},
      {"3.4", CodeSpec::c1(4), 256, 25, 96,
       {{0, 1},
        {96, 17136},
        {112, 2437120},
        {120, 6754304},
        {128, 15137310},
        {136, 6754304},
        {144, 2437120},
        {160, 17136},
        {256, 1}},
       0,
       {}},
      {"3.5", CodeSpec::c1(2), 16, 11, 4,
       {{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}},
       3,
       {{4, 1}, {6, 16}, {8, 87}, {10, 96}, {12, 55}}},
      {"3.6", CodeSpec::c2(2, 1), 16, 11, 4,
       {{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}},
       2,
       {{4, 7}, {6, 56}, {8, 203}, {10, 168}, {12, 77}}},
      {"3.7", CodeSpec::c2(3, 2), 64, 16, 24,
       {{0, 1}, {24, 5040}, {28, 12544}, {32, 30366}, {36, 12544}, {40, 5040}, {64, 1}},
       2,
       {{24, 690}, {28, 2352}, {32, 7471}, {36, 3920}, {40, 1950}}},
      {"3.8", CodeSpec::c2(3, 1), 64, 16, 16,
       {{0, 1}, {16, 84}, {24, 3360}, {28, 17920}, {32, 22806}, {36, 17920}, {40, 3360}, {48, 84}, {64, 1}},
       2,
       {{16, 5}, {24, 460}, {28, 3360}, {32, 5611}, {36, 5600}, {40, 1300}, {48, 47}}},
  };
  return examples;
}

}  // namespace design_forge
