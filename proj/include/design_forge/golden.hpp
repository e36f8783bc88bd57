#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "design_forge/codebuild.hpp"

namespace design_forge {

/// A reference code instance with its enumerator and design lambdas.
struct GoldenExample {
  std::string id;
  CodeSpec spec;
  std::uint32_t length;
  unsigned dimension;
  std::uint32_t min_distance;
  std::map<std::uint32_t, std::uint64_t> enumerator;
  /// Strength the lambdas refer to; 0 when none are listed.
  int t;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> lambdas;
};

const std::vector<GoldenExample>& golden_examples();

}  // namespace design_forge
