#include <benchmark/benchmark.h>

#include "oligodyn/baseline.hpp"
#include "oligodyn/bifurcation.hpp"
#include "oligodyn/game.hpp"
#include "oligodyn/linalg.hpp"
#include "oligodyn/stability.hpp"

namespace {

using namespace oligodyn;

GameConfig reference_game(double d) {
  return {{200.0, 150.0, 100.0}, {20.0, 40.0}, d};
}

void BM_Step(benchmark::State& state) {
  const GameConfig g = reference_game(0.2);
  StateVector s = default_initial_state(g);
  for (auto _ : state) {
    s = step(g, s, IterateMode::Raw);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Step);

void BM_Simulate1000(benchmark::State& state) {
  const GameConfig g = reference_game(0.2);
  const StateVector init = default_initial_state(g);
  for (auto _ : state) {
    Trajectory traj = simulate(g, init, 1000, IterateMode::Clipped);
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_Simulate1000);

void BM_NashClosedForm(benchmark::State& state) {
  const GameConfig g = reference_game(0.2);
  for (auto _ : state) {
    StateVector nash = nash_duopoly_closed_form(g);
    benchmark::DoNotOptimize(nash);
  }
}
BENCHMARK(BM_NashClosedForm);

void BM_NashLinearSolve(benchmark::State& state) {
  GameConfig g;
  g.intercepts = {200, 180, 160, 140, 120};
  g.unit_costs = {20, 25, 30, 35};
  g.scale = 0.1;
  for (auto _ : state) {
    StateVector nash = nash_linear_solve(g);
    benchmark::DoNotOptimize(nash);
  }
}
BENCHMARK(BM_NashLinearSolve);

void BM_JacobiSpectrum16(benchmark::State& state) {
  GameConfig g;
  g.intercepts.assign(8, 150.0);
  g.unit_costs = {20, 40};
  g.scale = 0.2;
  const DenseMatrix jac = build_jacobian(g);
  for (auto _ : state) {
    EigenResult eig = symmetric_eigenvalues(jac);
    benchmark::DoNotOptimize(eig);
  }
}
BENCHMARK(BM_JacobiSpectrum16);

void BM_BifurcationScan(benchmark::State& state) {
  const GameConfig g = reference_game(0.0);
  BifurcationOptions opt;
  opt.d_lo = -0.1;
  opt.d_hi = 0.4;
  opt.points = 100;
  opt.transient = 200;
  opt.samples = 50;
  opt.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    BifurcationData data = bifurcation_scan(g, opt);
    benchmark::DoNotOptimize(data);
  }
}
BENCHMARK(BM_BifurcationScan)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
