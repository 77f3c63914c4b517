#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "oligodyn/game.hpp"

namespace oligodyn {

/// Malformed scenario document: JSON syntax errors, unknown or missing
/// keys, wrong types, bad shapes.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

struct SimulationSettings {
  std::optional<int> steps;
  std::optional<IterateMode> mode;
  std::optional<StateVector> initial;
  std::optional<std::size_t> transient;
  std::optional<std::size_t> samples;
};

struct Scenario {
  GameConfig config;
  SimulationSettings simulation;
  /// Validation outcome; hard_violations is empty by construction (a hard
  /// violation aborts parsing), soft_flags carry warnings for the caller.
  ValidationReport report;
};

/// Parses a scenario document:
///
///   {
///     "markets": [{"a": 200}, {"a": 150}, {"a": 100}],
///     "firms":   [{"c": 20}, {"c": 40}],
///     "d": 0.2,
///     "simulation": {"T": 500, "mode": "raw",
///                    "initial": [[10, 10, 10], [10, 10, 10]],
///                    "transient": 1000, "samples": 200}
///   }
///
/// The "simulation" block and all of its keys are optional.  Unknown keys
/// anywhere raise ScenarioError naming the key; syntax errors report line
/// and column.  Hard validation failures raise ValidationError listing
/// every violated rule.
Scenario parse_scenario(const std::filesystem::path& path);

/// Same contract as parse_scenario, reading from a string.  `origin` is
/// used in error messages in place of a file name.
Scenario parse_scenario_text(std::string_view text, std::string_view origin = "<scenario>");

}  // namespace oligodyn
