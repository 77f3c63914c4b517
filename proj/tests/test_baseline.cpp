#include <cmath>

#include "doctest.h"
#include "oligodyn/baseline.hpp"
#include "support/reference.hpp"

using namespace oligodyn;

TEST_CASE("constant-marginal-cost equilibrium and its firm-count stability ladder") {
  BaselineConfig g;
  g.intercept = 100.0;
  g.scale = 0.0;

  g.unit_costs = {10.0, 10.0};
  BaselineEquilibrium duo = baseline_theocharis(g);
  CHECK(duo.quantities == std::vector<double>{30.0, 30.0});
  CHECK(duo.stability == StabilityClass::Stable);

  g.unit_costs = {10.0, 10.0, 10.0};
  BaselineEquilibrium trio = baseline_theocharis(g);
  CHECK(trio.quantities[0] == doctest::Approx(22.5));
  CHECK(trio.stability == StabilityClass::NeutrallyStable);

  g.unit_costs = {10.0, 10.0, 10.0, 10.0};
  CHECK(baseline_theocharis(g).stability == StabilityClass::Unstable);

  // heterogeneous costs: every quantity satisfies its first-order condition
  g.unit_costs = {8.0, 12.0, 20.0};
  const BaselineEquilibrium mixed = baseline_theocharis(g);
  double total = 0.0;
  for (double q : mixed.quantities) total += q;
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(g.intercept - total - mixed.quantities[i] - g.unit_costs[i] ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  g.scale = 0.1;
  CHECK_THROWS_AS(baseline_theocharis(g), std::invalid_argument);
}

TEST_CASE("quadratic-cost equilibrium formula and stability boundary") {
  BaselineConfig g;
  g.intercept = 200.0;
  g.unit_costs = {20.0, 20.0};
  g.scale = 0.2;

  const BaselineEquilibrium eq = baseline_fisher(g);
  CHECK(eq.quantities[0] == doctest::Approx(900.0 / 17.0).epsilon(1e-14));
  CHECK(eq.quantities[1] == doctest::Approx(900.0 / 17.0).epsilon(1e-14));
  CHECK(eq.stability == StabilityClass::Stable);

  // equilibrium satisfies the first-order condition a - Q - q - c - 2dq = 0
  const double total = eq.quantities[0] + eq.quantities[1];
  for (double q : eq.quantities) {
    CHECK(g.intercept - total - q - 20.0 - 2.0 * g.scale * q ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  // the boundary (N - 3) / 2 is hit exactly
  BaselineConfig four;
  four.intercept = 100.0;
  four.unit_costs = {10.0, 10.0, 10.0, 10.0};
  four.scale = 0.6;
  CHECK(baseline_fisher(four).stability == StabilityClass::Stable);
  four.scale = 0.5;
  CHECK(baseline_fisher(four).stability == StabilityClass::NeutrallyStable);
  four.scale = 0.4;
  CHECK(baseline_fisher(four).stability == StabilityClass::Unstable);

  // with d = 0 the formula collapses to the constant-cost equilibrium
  BaselineConfig flat;
  flat.intercept = 100.0;
  flat.unit_costs = {8.0, 12.0, 20.0};
  flat.scale = 0.0;
  const BaselineEquilibrium a = baseline_fisher(flat);
  const BaselineEquilibrium b = baseline_theocharis(flat);
  CHECK(ref::max_abs_diff(a.quantities, b.quantities) < 1e-12);
}

TEST_CASE("baseline validation") {
  BaselineConfig g;
  g.intercept = 100.0;
  g.unit_costs = {10.0, -1.0};
  CHECK_THROWS_AS(baseline_fisher(g), std::invalid_argument);

  g.unit_costs = {10.0, 120.0};
  CHECK_THROWS_AS(baseline_fisher(g), std::invalid_argument);

  g.unit_costs = {10.0};
  g.scale = -0.5;
  CHECK_THROWS_AS(baseline_fisher(g), std::invalid_argument);

  g.unit_costs.clear();
  g.scale = 0.0;
  CHECK_THROWS_AS(baseline_theocharis(g), std::invalid_argument);
}

TEST_CASE("fisher_trajectory converges to the equilibrium when stable") {
  BaselineConfig g;
  g.intercept = 200.0;
  g.unit_costs = {20.0, 35.0};
  g.scale = 0.2;

  const BaselineEquilibrium eq = baseline_fisher(g);
  const Trajectory traj = fisher_trajectory(g, {10.0, 10.0}, 400);
  CHECK(traj.classification == TrajectoryClass::Feasible);
  REQUIRE(traj.states.size() == 401);
  CHECK(traj.states.back().markets() == 1);
  CHECK(ref::max_abs_diff(traj.states.back().values(), eq.quantities) < 1e-9);

  // one step by hand: q_i' = (a - rival - c_i) / (2 (1 + d))
  const StateVector& first = traj.states[1];
  CHECK(first.at(0, 0) == (200.0 - 10.0 - 20.0) / 2.4);
  CHECK(first.at(1, 0) == (200.0 - 10.0 - 35.0) / 2.4);
}

TEST_CASE("fisher_trajectory diverges for many firms without scale costs") {
  BaselineConfig g;
  g.intercept = 100.0;
  g.unit_costs = {10.0, 10.0, 10.0, 10.0, 10.0};
  g.scale = 0.0;

  const Trajectory traj = fisher_trajectory(g, {1.0, 2.0, 3.0, 4.0, 5.0}, 200);
  CHECK(traj.classification == TrajectoryClass::Divergent);
  CHECK(traj.states.size() < 201);

  CHECK_THROWS_AS(fisher_trajectory(g, {1.0, 2.0}, 10), ShapeError);
  CHECK_THROWS_AS(fisher_trajectory(g, {1, 2, 3, 4, 5}, 0), std::invalid_argument);
}
