#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oligodyn/game.hpp"

namespace oligodyn {

struct BifurcationOptions {
  double d_lo = 0.0;
  double d_hi = 0.0;
  std::size_t points = 1000;    // evenly spaced d values, endpoints included
  std::size_t transient = 1000; // discarded steps per cell
  std::size_t samples = 200;    // recorded steps per cell
  IterateMode mode = IterateMode::Clipped;
  std::optional<StateVector> initial;  // fixed start; default recomputes per d
  std::size_t threads = 0;             // 0 = hardware concurrency
};

struct BifurcationCell {
  double d = 0.0;
  bool divergent = false;
  /// samples[firm * markets + market][k], empty when divergent.
  std::vector<std::vector<double>> samples;
};

struct BifurcationData {
  std::size_t firms = 0;
  std::size_t markets = 0;
  BifurcationOptions options;
  std::vector<BifurcationCell> cells;  // ascending in d
};

/// Sweeps d over [d_lo, d_hi], iterating the map per grid point from the
/// chosen initial state and recording the post-transient samples.  Cells
/// whose orbit crosses the divergence cutoff are flagged instead of
/// sampled.  Cells are independent, so they are distributed over worker
/// threads; results are assembled in grid order and identical for any
/// thread count.
BifurcationData bifurcation_scan(const GameConfig& base, const BifurcationOptions& options);

}  // namespace oligodyn
