#include "oligodyn/bifurcation.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>
#include <utility>

namespace oligodyn {

namespace {

// Same update rule as the public step(), kept allocation-free for the
// sweep's inner loop.
void step_cell(const GameConfig& g, const std::vector<double>& cur,
               std::vector<double>& out, IterateMode mode) {
  const std::size_t n = g.firms();
  const std::size_t m = g.markets();
  const double denom = 2.0 * (1.0 + g.scale);
  for (std::size_t i = 0; i < n; ++i) {
    double own_total = 0.0;
    for (std::size_t j = 0; j < m; ++j) own_total += cur[i * m + j];
    for (std::size_t j = 0; j < m; ++j) {
      double rivals = -cur[i * m + j];
      for (std::size_t k = 0; k < n; ++k) rivals += cur[k * m + j];
      const double elsewhere = own_total - cur[i * m + j];
      double q = (g.intercepts[j] - rivals - g.unit_costs[i] -
                  2.0 * g.scale * elsewhere) /
                 denom;
      if (mode == IterateMode::Clipped && q < 0.0) q = 0.0;
      out[i * m + j] = q;
    }
  }
}

bool over_threshold(const std::vector<double>& q) {
  for (double v : q) {
    if (std::abs(v) > kDivergenceThreshold) return true;
  }
  return false;
}

void run_cell(const GameConfig& base, const BifurcationOptions& opt, double d,
              BifurcationCell& cell) {
  GameConfig g = base;
  g.scale = d;
  cell.d = d;

  std::vector<double> cur;
  if (opt.initial) {
    cur = opt.initial->values();
  } else {
    cur = default_initial_state(g).values();
  }
  std::vector<double> next(cur.size());

  for (std::size_t t = 0; t < opt.transient; ++t) {
    step_cell(g, cur, next, opt.mode);
    cur.swap(next);
    if (over_threshold(cur)) {
      cell.divergent = true;
      return;
    }
  }

  const std::size_t coords = cur.size();
  cell.samples.assign(coords, {});
  for (auto& series : cell.samples) series.reserve(opt.samples);
  for (std::size_t t = 0; t < opt.samples; ++t) {
    step_cell(g, cur, next, opt.mode);
    cur.swap(next);
    if (over_threshold(cur)) {
      cell.divergent = true;
      cell.samples.clear();
      return;
    }
    for (std::size_t x = 0; x < coords; ++x) cell.samples[x].push_back(cur[x]);
  }
}

}  // namespace

BifurcationData bifurcation_scan(const GameConfig& base, const BifurcationOptions& opt) {
  if (!(opt.d_lo < opt.d_hi)) throw std::invalid_argument("d range requires d_lo < d_hi");
  if (opt.d_lo <= -1.0) {
    throw std::invalid_argument("every scanned d must satisfy d > -1");
  }
  if (opt.points < 2) throw std::invalid_argument("scan needs at least 2 grid points");
  if (opt.samples < 1) throw std::invalid_argument("scan needs at least 1 sample");
  {
    GameConfig probe = base;
    probe.scale = opt.d_lo;
    require_valid(probe);
  }
  if (opt.initial) {
    if (opt.initial->firms() != base.firms() || opt.initial->markets() != base.markets()) {
      throw ShapeError("initial state shape does not match the game");
    }
    if (!opt.initial->all_finite()) {
      throw std::invalid_argument("state quantities must be finite");
    }
  }

  BifurcationData data;
  data.firms = base.firms();
  data.markets = base.markets();
  data.options = opt;
  data.cells.resize(opt.points);

  const double span = opt.d_hi - opt.d_lo;
  const double step_d = span / static_cast<double>(opt.points - 1);

  std::size_t workers = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min(workers, opt.points);

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= opt.points) return;
      const double d = opt.d_lo + static_cast<double>(k) * step_d;
      run_cell(base, opt, d, data.cells[k]);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return data;
}

}  // namespace oligodyn
