#include <cmath>
#include <cstddef>

#include "doctest.h"
#include "oligodyn/bifurcation.hpp"
#include "support/reference.hpp"

using namespace oligodyn;

namespace {

GameConfig reference_game(double d) {
  return {{200.0, 150.0, 100.0}, {20.0, 40.0}, d};
}

double cell_spread(const BifurcationCell& cell) {
  double spread = 0.0;
  for (const auto& coord : cell.samples) {
    double lo = coord.front();
    double hi = coord.front();
    for (double v : coord) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    spread = std::max(spread, hi - lo);
  }
  return spread;
}

}  // namespace

TEST_CASE("scan over a stable window collapses every cell to a point") {
  BifurcationOptions opt;
  opt.d_lo = -0.1;
  opt.d_hi = 0.3;
  opt.points = 9;
  opt.transient = 600;
  opt.samples = 20;

  const BifurcationData data = bifurcation_scan(reference_game(0.0), opt);
  CHECK(data.firms == 2);
  CHECK(data.markets == 3);
  REQUIRE(data.cells.size() == 9);
  CHECK(data.cells.front().d == -0.1);
  CHECK(data.cells.back().d == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(data.cells[4].d == doctest::Approx(0.1).epsilon(1e-15));

  for (const BifurcationCell& cell : data.cells) {
    CHECK_FALSE(cell.divergent);
    REQUIRE(cell.samples.size() == 6);
    for (const auto& coord : cell.samples) REQUIRE(coord.size() == 20);
    CHECK(cell_spread(cell) < 1e-9);
    // settled samples sit on the equilibrium for that d
    GameConfig g = reference_game(cell.d);
    const StateVector nash = nash_linear_solve(g);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(cell.samples[i * 3 + j][0] ==
              doctest::Approx(nash.at(i, j)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("interior of the stable zone stays collapsed at the default budget") {
  BifurcationOptions opt;
  opt.d_lo = -0.16;
  opt.d_hi = 0.45;
  opt.points = 60;
  opt.transient = 1000;
  opt.samples = 50;

  const BifurcationData data = bifurcation_scan(reference_game(0.0), opt);
  REQUIRE(data.cells.size() == 60);
  for (const BifurcationCell& cell : data.cells) {
    CHECK_FALSE(cell.divergent);
    CHECK(cell_spread(cell) <= 1e-6);
  }
}

TEST_CASE("grid points where the map itself is singular survive the scan") {
  // d = -1/6 lands exactly on the third grid node below; clipped orbits stay
  // bounded there even though the equilibrium system is singular
  BifurcationOptions opt;
  opt.d_lo = -0.25;
  opt.d_hi = 0.0;
  opt.points = 7;
  opt.transient = 300;
  opt.samples = 10;

  const BifurcationData data = bifurcation_scan(reference_game(0.0), opt);
  REQUIRE(data.cells.size() == 7);
  CHECK(data.cells[2].d == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  for (const BifurcationCell& cell : data.cells) {
    CHECK_FALSE(cell.divergent);
    REQUIRE(cell.samples.size() == 6);
    for (const auto& coord : cell.samples) {
      REQUIRE(coord.size() == 10);
      for (double v : coord) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
      }
    }
  }
}

TEST_CASE("raw scans flag divergent cells and keep no samples there") {
  BifurcationOptions opt;
  opt.d_lo = -0.3;
  opt.d_hi = 0.1;
  opt.points = 5;  // grid: -0.3, -0.2, -0.1, 0.0, 0.1
  opt.transient = 400;
  opt.samples = 8;
  opt.mode = IterateMode::Raw;

  const BifurcationData data = bifurcation_scan(reference_game(0.0), opt);
  REQUIRE(data.cells.size() == 5);
  CHECK(data.cells[0].divergent);
  CHECK(data.cells[1].divergent);
  CHECK(data.cells[0].samples.empty());
  CHECK(data.cells[1].samples.empty());
  for (std::size_t k = 2; k < 5; ++k) {
    CHECK_FALSE(data.cells[k].divergent);
    REQUIRE(data.cells[k].samples.size() == 6);
    CHECK(cell_spread(data.cells[k]) < 1e-6);
  }
}

TEST_CASE("a fixed initial state overrides the per-d default seed") {
  BifurcationOptions opt;
  opt.d_lo = 0.1;
  opt.d_hi = 0.2;
  opt.points = 3;
  opt.transient = 500;
  opt.samples = 5;
  opt.initial = StateVector(2, 3, 10.0);

  const BifurcationData data = bifurcation_scan(reference_game(0.0), opt);
  for (const BifurcationCell& cell : data.cells) {
    CHECK_FALSE(cell.divergent);
    CHECK(cell_spread(cell) < 1e-8);
  }

  StateVector bad(3, 3, 10.0);
  BifurcationOptions mismatched = opt;
  mismatched.initial = bad;
  CHECK_THROWS_AS(bifurcation_scan(reference_game(0.0), mismatched), ShapeError);
}

TEST_CASE("option validation") {
  const GameConfig g = reference_game(0.0);
  BifurcationOptions opt;
  opt.d_lo = 0.2;
  opt.d_hi = 0.1;
  CHECK_THROWS_AS(bifurcation_scan(g, opt), std::invalid_argument);

  opt = {};
  opt.d_lo = -1.2;
  opt.d_hi = 0.1;
  CHECK_THROWS_AS(bifurcation_scan(g, opt), std::invalid_argument);

  opt = {};
  opt.d_lo = 0.0;
  opt.d_hi = 0.1;
  opt.points = 1;
  CHECK_THROWS_AS(bifurcation_scan(g, opt), std::invalid_argument);

  opt = {};
  opt.d_lo = 0.0;
  opt.d_hi = 0.1;
  opt.samples = 0;
  CHECK_THROWS_AS(bifurcation_scan(g, opt), std::invalid_argument);

  GameConfig invalid = g;
  invalid.unit_costs.clear();
  opt = {};
  opt.d_lo = 0.0;
  opt.d_hi = 0.1;
  CHECK_THROWS_AS(bifurcation_scan(invalid, opt), ValidationError);
}

TEST_CASE("thread count does not change the result") {
  BifurcationOptions opt;
  opt.d_lo = -0.16;
  opt.d_hi = 0.52;
  opt.points = 40;
  opt.transient = 400;
  opt.samples = 25;

  BifurcationOptions serial = opt;
  serial.threads = 1;
  BifurcationOptions parallel = opt;
  parallel.threads = 4;

  const BifurcationData a = bifurcation_scan(reference_game(0.0), serial);
  const BifurcationData b = bifurcation_scan(reference_game(0.0), parallel);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    CHECK(a.cells[k].d == b.cells[k].d);
    CHECK(a.cells[k].divergent == b.cells[k].divergent);
    REQUIRE(a.cells[k].samples == b.cells[k].samples);
  }
}
