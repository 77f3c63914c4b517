#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "oligodyn/artifacts.hpp"
#include "oligodyn/baseline.hpp"
#include "oligodyn/stability.hpp"
#include "support/reference.hpp"

using namespace oligodyn;

TEST_CASE("property: the Nash point is a fixed point of the raw map") {
  ref::ConfigGen gen(1001);
  for (int trial = 0; trial < 150; ++trial) {
    const GameConfig g = gen.game();
    StateVector nash;
    try {
      nash = nash_linear_solve(g);
    } catch (const SingularSystemError&) {
      continue;  // generator keeps d away from these; hitting one is fine
    }
    const StateVector next = step(g, nash, IterateMode::Raw);
    const double scale = std::max(1.0, nash.max_abs());
    for (std::size_t i = 0; i < g.firms(); ++i) {
      for (std::size_t j = 0; j < g.markets(); ++j) {
        CHECK(std::abs(next.at(i, j) - nash.at(i, j)) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("property: at d = 0 every market evolves as an independent single-market game") {
  ref::ConfigGen gen(1002);
  for (int trial = 0; trial < 100; ++trial) {
    GameConfig g = gen.game();
    g.scale = 0.0;
    const std::size_t n = g.firms();
    const std::size_t m = g.markets();
    const StateVector initial(n, m, gen.nonneg_state(n * m));

    const Trajectory multi = simulate(g, initial, 20, IterateMode::Raw);
    REQUIRE(multi.states.size() == 21);

    for (std::size_t j = 0; j < m; ++j) {
      BaselineConfig base;
      base.intercept = g.intercepts[j];
      base.unit_costs = g.unit_costs;
      base.scale = 0.0;
      std::vector<double> column(n);
      for (std::size_t i = 0; i < n; ++i) column[i] = initial.at(i, j);
      const Trajectory single = fisher_trajectory(base, column, 20);
      REQUIRE(single.states.size() == 21);
      for (std::size_t t = 0; t < 21; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(multi.states[t].at(i, j) == single.states[t].at(i, 0));
        }
      }
    }
  }
}

TEST_CASE("property: with one market the full machinery reduces to the baseline map") {
  ref::ConfigGen gen(1003);
  for (int trial = 0; trial < 100; ++trial) {
    const GameConfig g = gen.game(0, 1);
    const std::size_t n = g.firms();
    const std::vector<double> start = gen.nonneg_state(n);

    const Trajectory multi = simulate(g, StateVector(n, 1, start), 15, IterateMode::Raw);

    BaselineConfig base;
    base.intercept = g.intercepts[0];
    base.unit_costs = g.unit_costs;
    base.scale = g.scale;
    const Trajectory single = fisher_trajectory(base, start, 15);

    REQUIRE(multi.states.size() == single.states.size());
    CHECK(multi.classification == single.classification);
    for (std::size_t t = 0; t < multi.states.size(); ++t) {
      CHECK(multi.states[t] == single.states[t]);
    }
  }
}

TEST_CASE("property: relabeling markets permutes equilibria and trajectories") {
  ref::ConfigGen gen(1004);
  for (int trial = 0; trial < 100; ++trial) {
    const GameConfig g = gen.game(0, 0);
    const std::size_t n = g.firms();
    const std::size_t m = g.markets();

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen.rng);

    GameConfig permuted = g;
    for (std::size_t k = 0; k < m; ++k) permuted.intercepts[k] = g.intercepts[perm[k]];

    StateVector base_nash, perm_nash;
    try {
      base_nash = nash_linear_solve(g);
      perm_nash = nash_linear_solve(permuted);
    } catch (const SingularSystemError&) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        CHECK(std::abs(perm_nash.at(i, k) - base_nash.at(i, perm[k])) <=
              1e-9 * std::max(1.0, base_nash.max_abs()));
      }
    }

    const StateVector initial(n, m, gen.nonneg_state(n * m));
    StateVector shuffled(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) shuffled.at(i, k) = initial.at(i, perm[k]);
    }
    const Trajectory base_run = simulate(g, initial, 10, IterateMode::Clipped);
    const Trajectory perm_run = simulate(permuted, shuffled, 10, IterateMode::Clipped);
    REQUIRE(base_run.states.size() == perm_run.states.size());
    for (std::size_t t = 0; t < base_run.states.size(); ++t) {
      const double scale = std::max(1.0, base_run.states[t].max_abs());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
          CHECK(std::abs(perm_run.states[t].at(i, k) -
                         base_run.states[t].at(i, perm[k])) <= 1e-9 * scale);
        }
      }
    }
  }
}

TEST_CASE("property: the Jacobian is symmetric for every parameter draw") {
  ref::ConfigGen gen(1005);
  for (int trial = 0; trial < 120; ++trial) {
    const GameConfig g = gen.game_wide();
    const DenseMatrix jac = build_jacobian(g);
    const std::size_t size = jac.size();
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) CHECK(jac(r, c) == jac(c, r));
    }
  }
}

TEST_CASE("property: clipped orbits never record a negative quantity") {
  ref::ConfigGen gen(1006);
  for (int trial = 0; trial < 120; ++trial) {
    const GameConfig g = gen.game_wide();
    const StateVector initial(g.firms(), g.markets(),
                              gen.nonneg_state(g.firms() * g.markets()));
    const Trajectory traj = simulate(g, initial, 50, IterateMode::Clipped);
    for (const StateVector& state : traj.states) CHECK(state.min_value() >= 0.0);
    if (traj.classification != TrajectoryClass::Divergent) {
      CHECK(traj.classification == TrajectoryClass::Feasible);
    }
  }
}

TEST_CASE("property: equilibrium profit equals sum of squares plus the scale term") {
  ref::ConfigGen gen(1007);
  for (int trial = 0; trial < 150; ++trial) {
    const GameConfig g = gen.game();
    StateVector nash;
    try {
      nash = nash_linear_solve(g);
    } catch (const SingularSystemError&) {
      continue;
    }
    for (std::size_t i = 0; i < g.firms(); ++i) {
      double squares = 0.0;
      for (std::size_t j = 0; j < g.markets(); ++j) {
        squares += nash.at(i, j) * nash.at(i, j);
      }
      const double total = nash.firm_total(i);
      const double want = squares + g.scale * total * total;
      const double got = profit(g, nash, i);
      CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("property: every serialized number parses back to the same double") {
  ref::ConfigGen gen(1008);
  int checked = 0;
  while (checked < 200) {
    const int exponent = static_cast<int>(gen.between(0, 600)) - 300;
    const double v = gen.uniform(-1.0, 1.0) * std::pow(10.0, exponent);
    if (!std::isfinite(v)) continue;
    const std::string text = format_number(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
    ++checked;
  }
}

TEST_CASE("property: step agrees with per-cell best responses in both modes") {
  ref::ConfigGen gen(1009);
  for (int trial = 0; trial < 100; ++trial) {
    const GameConfig g = gen.game_wide();
    const StateVector state(g.firms(), g.markets(),
                            gen.nonneg_state(g.firms() * g.markets()));
    const StateVector raw = step(g, state, IterateMode::Raw);
    const StateVector clipped = step(g, state, IterateMode::Clipped);
    for (std::size_t i = 0; i < g.firms(); ++i) {
      for (std::size_t j = 0; j < g.markets(); ++j) {
        const double br = best_response(g, state, i, j);
        CHECK(raw.at(i, j) == br);
        CHECK(clipped.at(i, j) == std::max(0.0, br));
      }
    }
  }
}

TEST_CASE("property: soft flags fire exactly when their defining bounds do") {
  ref::ConfigGen gen(1010);
  for (int trial = 0; trial < 150; ++trial) {
    const GameConfig g = gen.game_wide();
    const ValidationReport report = validate(g);
    REQUIRE(report.ok());

    const double m = static_cast<double>(g.markets());
    const double a_sum = std::accumulate(g.intercepts.begin(), g.intercepts.end(), 0.0);
    const double c_min = *std::min_element(g.unit_costs.begin(), g.unit_costs.end());
    std::size_t expected = 0;
    if (g.scale <= -1.0 / (2.0 * m)) ++expected;
    if (g.scale < -c_min / (2.0 * a_sum)) ++expected;
    CHECK(report.soft_flags.size() == expected);
  }
}

TEST_CASE("property: simulation is deterministic") {
  ref::ConfigGen gen(1011);
  for (int trial = 0; trial < 50; ++trial) {
    const GameConfig g = gen.game_wide();
    const StateVector initial(g.firms(), g.markets(),
                              gen.nonneg_state(g.firms() * g.markets()));
    const IterateMode mode =
        gen.between(0, 1) == 0 ? IterateMode::Raw : IterateMode::Clipped;
    const Trajectory first = simulate(g, initial, 40, mode);
    const Trajectory second = simulate(g, initial, 40, mode);
    CHECK(first.classification == second.classification);
    REQUIRE(first.states.size() == second.states.size());
    for (std::size_t t = 0; t < first.states.size(); ++t) {
      CHECK(first.states[t] == second.states[t]);
    }
  }
}
