#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oligodyn/artifacts.hpp"
#include "oligodyn/bifurcation.hpp"
#include "oligodyn/scenario.hpp"
#include "oligodyn/stability.hpp"

namespace oligodyn {

struct OutputOptions {
  std::filesystem::path directory;
  bool svg = false;
};

struct SimulateOutcome {
  RunArtifacts artifacts;
  TrajectoryClass classification;
  std::size_t steps;
};

struct EquilibriumOutcome {
  RunArtifacts artifacts;
  StateVector equilibrium;
};

struct StabilityOutcome {
  RunArtifacts artifacts;
  SpectrumReport spectrum;
  std::optional<StabilityInterval> interval;  // duopoly scenarios only
  std::string summary;  // e.g. "Stable, rho=0.75, interval=(-0.166667, 0.5)"
};

struct BifurcateOutcome {
  RunArtifacts artifacts;
  BifurcationData data;
};

struct ZoneOutcome {
  RunArtifacts artifacts;
  std::vector<StabilityInterval> intervals;
};

struct CompareOutcome {
  RunArtifacts artifacts;
  TrajectoryClass retail;
  std::vector<TrajectoryClass> fisher;  // one per market
};

/// Runs the map from the scenario's initial state (or the default one)
/// and emits trajectory.csv with columns step,firm,market,quantity plus
/// equilibrium.csv with the Nash point, columns firm,market,quantity.
/// Firms and markets are 1-indexed in every CSV.
SimulateOutcome cmd_simulate(const Scenario& scenario, const OutputOptions& out,
                             std::optional<int> steps = {},
                             std::optional<IterateMode> mode = {});

/// Emits equilibrium.csv for the scenario's game.
EquilibriumOutcome cmd_equilibrium(const Scenario& scenario, const OutputOptions& out);

/// Emits eigen.csv with columns index,lambda and returns a one-line
/// human-readable summary of the verdict.
StabilityOutcome cmd_stability(const Scenario& scenario, const OutputOptions& out);

/// Sweeps d and emits bifurcation.csv with columns d,firm,market,quantity,
/// one row per recorded sample; divergent cells emit one row per
/// (firm, market) with the literal word "divergent" in the quantity column.
BifurcateOutcome cmd_bifurcate(const Scenario& scenario, const OutputOptions& out,
                               const BifurcationOptions& options);

/// Emits zone.csv with columns m,d_lower,d_upper; an unbounded upper end
/// serializes as "inf".
ZoneOutcome cmd_zone(std::size_t m_min, std::size_t m_max, const OutputOptions& out);

/// Runs the multi-market map and, per market, the single-market
/// quadratic-cost baseline from the same initial column, then emits
/// compare.csv with columns step,model,firm,market,quantity where model
/// is "retail" or "fisher".
CompareOutcome cmd_compare(const Scenario& scenario, const OutputOptions& out,
                           std::optional<int> steps = {},
                           std::optional<IterateMode> mode = {});

}  // namespace oligodyn
