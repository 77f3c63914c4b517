#pragma once

#include <cstddef>
#include <vector>

#include "oligodyn/game.hpp"
#include "oligodyn/linalg.hpp"

namespace oligodyn {

struct SpectrumReport {
  std::vector<double> eigenvalues;  // sorted ascending
  double spectral_radius = 0.0;
  StabilityClass stability = StabilityClass::Stable;
  double tolerance = 0.0;  // neutrality band applied to |rho - 1|
};

/// Jacobian of the synchronous best-response map at any state (the map is
/// affine, so the matrix depends only on N, M and d).  Rows and columns
/// are firm-major.  The matrix is symmetric by construction.
DenseMatrix build_jacobian(const GameConfig& config);

/// Eigenvalues of the duopoly Jacobian in closed form, sorted ascending:
///   -(2(m-1)d + 1) / (2(1+d))            simple
///   -(2(m-1)d - 1) / (2(1+d))            simple
///   (2d + 1) / (2(1+d))                  multiplicity m-1
///   (2d - 1) / (2(1+d))                  multiplicity m-1
/// For m = 1 only the two simple eigenvalues remain.
std::vector<double> eigenvalues_closed_form(std::size_t markets, double d);

/// Spectral radius verdict for the equilibrium of the given game.  Two
/// firms use the closed-form spectrum; other firm counts diagonalize the
/// Jacobian numerically.  |rho - 1| <= tol is reported NeutrallyStable.
SpectrumReport classify_stability(const GameConfig& config, double tol = 1e-9);

struct StabilityInterval {
  std::size_t markets = 0;
  double d_lower = 0.0;
  double d_upper = 0.0;  // +infinity when no upper bound exists
};

/// Open interval of d for which the duopoly equilibrium is stable:
/// m = 1 gives (-1/2, inf), m = 2 gives (-1/4, inf), m >= 3 gives
/// (-1/(2m), 1/(2(m-2))).
StabilityInterval stability_interval(std::size_t markets);

/// Stability intervals for every market count in [m_min, m_max].
std::vector<StabilityInterval> stability_zone_scan(std::size_t m_min, std::size_t m_max);

}  // namespace oligodyn
