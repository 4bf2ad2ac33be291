#pragma once

#include <filesystem>
#include <optional>
#include <utility>

#include <json.hpp>

#include "satgame/engagement.hpp"
#include "satgame/strategy.hpp"

namespace satgame {

// One engagement as stored on disk, plus optional workbench hints.
struct Scenario {
  EngagementConfig config;
  std::optional<TargetPolicy> policy;           // default policy for simulate
  std::optional<std::pair<double, double>> v_sweep;  // default speed-sweep range
  int boundary_samples = kDefaultBoundarySamples;
};

// Parses and validates. Throws ValidationError with one message per bad
// field; structural problems (missing keys, wrong shapes) and semantic ones
// (speed ordering, target out of range) are both reported.
Scenario parse_scenario(const nlohmann::json&);

// Reads the file, then parse_scenario. File and JSON syntax problems also
// arrive as ValidationError so the CLI maps everything to one exit code.
Scenario load_scenario(const std::filesystem::path&);

nlohmann::json scenario_to_json(const Scenario&);

}  // namespace satgame
