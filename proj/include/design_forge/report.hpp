#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "design_forge/codebuild.hpp"
#include "design_forge/designs.hpp"
#include "design_forge/gf2m.hpp"
#include "design_forge/invariance.hpp"
#include "design_forge/spectrum.hpp"

namespace design_forge {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted and
// byte-stable. Exact counts are always decimal strings.

nlohmann::json to_json(const WeightDistribution& dist);
/// Inverse of to_json; throws InvalidParameters on malformed input.
WeightDistribution distribution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CodeSpec& spec);
nlohmann::json to_json(const FieldSpec& field);
nlohmann::json to_json(const DesignReport& report);
nlohmann::json to_json(const ClosureResult& closure);

/// "w,count" header plus one row per weight.
std::string distribution_csv(const WeightDistribution& dist);
std::string design_reports_csv(std::span<const DesignReport> reports);
/// One block per line, space-separated point indices.
std::string blocks_csv(std::span<const std::vector<std::uint32_t>> blocks);

}  // namespace design_forge
