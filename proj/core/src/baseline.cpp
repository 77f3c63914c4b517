#include "oligodyn/baseline.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

namespace oligodyn {

namespace {

void check_baseline(const BaselineConfig& g) {
  if (g.firms() == 0) throw std::invalid_argument("at least one firm is required");
  if (!std::isfinite(g.intercept) || !std::isfinite(g.scale)) {
    throw std::invalid_argument("all parameters must be finite");
  }
  for (double c : g.unit_costs) {
    if (!std::isfinite(c)) throw std::invalid_argument("all parameters must be finite");
    if (c <= 0.0) throw std::invalid_argument("unit costs must be positive");
    if (g.intercept < c) {
      throw std::invalid_argument("intercept must be at least every unit cost");
    }
  }
}

double mean_cost(const BaselineConfig& g) {
  return std::accumulate(g.unit_costs.begin(), g.unit_costs.end(), 0.0) /
         static_cast<double>(g.firms());
}

}  // namespace

BaselineEquilibrium baseline_theocharis(const BaselineConfig& g) {
  check_baseline(g);
  if (g.scale != 0.0) {
    throw std::invalid_argument("constant-marginal-cost baseline requires d = 0");
  }
  const double n = static_cast<double>(g.firms());
  const double cbar = mean_cost(g);

  BaselineEquilibrium eq;
  eq.quantities.reserve(g.firms());
  for (double ci : g.unit_costs) {
    eq.quantities.push_back((g.intercept - ci + n * (cbar - ci)) / (n + 1.0));
  }
  eq.stability = g.firms() <= 2   ? StabilityClass::Stable
                 : g.firms() == 3 ? StabilityClass::NeutrallyStable
                                  : StabilityClass::Unstable;
  return eq;
}

BaselineEquilibrium baseline_fisher(const BaselineConfig& g) {
  check_baseline(g);
  if (g.scale <= -0.5) {
    throw std::invalid_argument("quadratic-cost baseline requires d > -1/2");
  }
  const double n = static_cast<double>(g.firms());
  const double d = g.scale;
  const double cbar = mean_cost(g);
  const double den = (1.0 + 2.0 * d) * (n + 1.0 + 2.0 * d);
  if (std::abs(den) < 1e-12) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "equilibrium denominator vanishes at d=%.17g", d);
    throw SingularParameterError(msg);
  }

  BaselineEquilibrium eq;
  eq.quantities.reserve(g.firms());
  for (double ci : g.unit_costs) {
    eq.quantities.push_back(
        ((g.intercept - ci) * (1.0 + 2.0 * d) + n * (cbar - ci)) / den);
  }
  // exact comparison: the boundary (N - 3) / 2 is representable for all N
  const double boundary = (n - 3.0) / 2.0;
  eq.stability = d > boundary   ? StabilityClass::Stable
                 : d == boundary ? StabilityClass::NeutrallyStable
                                 : StabilityClass::Unstable;
  return eq;
}

Trajectory fisher_trajectory(const BaselineConfig& g, const std::vector<double>& initial,
                             int steps) {
  check_baseline(g);
  if (1.0 + g.scale == 0.0) {
    throw SingularParameterError("best response undefined at d = -1 (division by zero)");
  }
  if (g.scale <= -1.0) throw std::invalid_argument("second-order condition d>-1 violated");
  if (initial.size() != g.firms()) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "initial state has %zu entries, expected %zu",
                  initial.size(), g.firms());
    throw ShapeError(msg);
  }
  for (double q : initial) {
    if (!std::isfinite(q)) throw std::invalid_argument("state quantities must be finite");
  }
  if (steps < 1) throw std::invalid_argument("T must be >= 1");

  const std::size_t n = g.firms();
  const double denom = 2.0 * (1.0 + g.scale);

  Trajectory traj;
  traj.mode = IterateMode::Raw;
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.push_back(StateVector(n, 1, initial));

  bool negative = traj.states.back().min_value() < 0.0;
  bool divergent = false;
  StateVector next(n, 1);
  for (int t = 0; t < steps; ++t) {
    const StateVector& cur = traj.states.back();
    const double total = cur.market_supply(0);
    for (std::size_t i = 0; i < n; ++i) {
      next.at(i, 0) = (g.intercept - (total - cur.at(i, 0)) - g.unit_costs[i]) / denom;
    }
    traj.states.push_back(next);
    if (next.min_value() < 0.0) negative = true;
    if (next.max_abs() > kDivergenceThreshold) {
      divergent = true;
      break;
    }
  }
  traj.classification = divergent ? TrajectoryClass::Divergent
                        : negative ? TrajectoryClass::AdmissibleOnly
                                   : TrajectoryClass::Feasible;
  return traj;
}

}  // namespace oligodyn
