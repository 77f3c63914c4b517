#pragma once

#include <cstddef>
#include <vector>

#include "oligodyn/game.hpp"

namespace oligodyn {

/// Single-market oligopoly with linear demand a - Q and firm costs
/// c_i q + d q^2.  With d = 0 this is the classic constant-marginal-cost
/// game; d != 0 adds the quadratic term that restores stability for
/// larger firm counts.
struct BaselineConfig {
  double intercept = 0.0;          // demand intercept a
  std::vector<double> unit_costs;  // c_i per firm
  double scale = 0.0;              // quadratic cost coefficient d

  std::size_t firms() const { return unit_costs.size(); }
};

struct BaselineEquilibrium {
  std::vector<double> quantities;
  StabilityClass stability = StabilityClass::Stable;
};

/// Equilibrium of the constant-marginal-cost game (requires d = 0):
/// q_i = (a - c_i + N (cbar - c_i)) / (N + 1).  Stable for N <= 2,
/// neutrally stable at N = 3, unstable beyond.
BaselineEquilibrium baseline_theocharis(const BaselineConfig& config);

/// Equilibrium of the quadratic-cost game (requires d > -1/2):
/// q_i = ((a - c_i)(1 + 2d) + N (cbar - c_i)) / ((1 + 2d)(N + 1 + 2d)).
/// Stable iff (N - 3) / 2 < d, neutrally stable at equality.
BaselineEquilibrium baseline_fisher(const BaselineConfig& config);

/// Naive best-response iteration of the quadratic-cost game,
/// q_i(t+1) = (a - sum_{k != i} q_k(t) - c_i) / (2 (1 + d)).
/// States are N x 1 grids so the trajectory plumbing is shared with the
/// multi-market model, including the divergence cutoff and class labels.
Trajectory fisher_trajectory(const BaselineConfig& config,
                             const std::vector<double>& initial, int steps);

}  // namespace oligodyn
