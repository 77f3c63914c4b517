#include "oligodyn/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace oligodyn {

DenseMatrix build_jacobian(const GameConfig& g) {
  require_valid(g);
  if (1.0 + g.scale == 0.0) {
    throw SingularParameterError("jacobian undefined at d = -1 (division by zero)");
  }
  const std::size_t n = g.firms();
  const std::size_t m = g.markets();
  const double d = g.scale;
  const double own = -d / (1.0 + d);          // same firm, other market
  const double rival = -1.0 / (2.0 * (1.0 + d));  // other firm, same market

  DenseMatrix jac(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t row = i * m + j;
      for (std::size_t l = 0; l < m; ++l) {
        if (l != j) jac(row, i * m + l) = own;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) jac(row, k * m + j) = rival;
      }
    }
  }
  return jac;
}

std::vector<double> eigenvalues_closed_form(std::size_t markets, double d) {
  if (markets == 0) throw std::invalid_argument("at least one market is required");
  if (1.0 + d == 0.0) {
    throw SingularParameterError("eigenvalues undefined at d = -1 (division by zero)");
  }
  const double m = static_cast<double>(markets);
  const double denom = 2.0 * (1.0 + d);

  std::vector<double> eig;
  eig.push_back(-(2.0 * (m - 1.0) * d + 1.0) / denom);
  eig.push_back(-(2.0 * (m - 1.0) * d - 1.0) / denom);
  for (std::size_t r = 1; r < markets; ++r) {
    eig.push_back((2.0 * d + 1.0) / denom);
    eig.push_back((2.0 * d - 1.0) / denom);
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

SpectrumReport classify_stability(const GameConfig& g, double tol) {
  SpectrumReport report;
  report.tolerance = tol;
  if (g.firms() == 2) {
    require_valid(g);
    report.eigenvalues = eigenvalues_closed_form(g.markets(), g.scale);
  } else {
    report.eigenvalues = symmetric_eigenvalues(build_jacobian(g)).eigenvalues;
  }
  double rho = 0.0;
  for (double lambda : report.eigenvalues) rho = std::max(rho, std::abs(lambda));
  report.spectral_radius = rho;
  report.stability = std::abs(rho - 1.0) <= tol ? StabilityClass::NeutrallyStable
                     : rho < 1.0               ? StabilityClass::Stable
                                               : StabilityClass::Unstable;
  return report;
}

StabilityInterval stability_interval(std::size_t markets) {
  if (markets == 0) throw std::invalid_argument("at least one market is required");
  StabilityInterval zone;
  zone.markets = markets;
  const double m = static_cast<double>(markets);
  if (markets <= 2) {
    zone.d_lower = markets == 1 ? -0.5 : -0.25;
    zone.d_upper = std::numeric_limits<double>::infinity();
  } else {
    zone.d_lower = -1.0 / (2.0 * m);
    zone.d_upper = 1.0 / (2.0 * (m - 2.0));
  }
  return zone;
}

std::vector<StabilityInterval> stability_zone_scan(std::size_t m_min, std::size_t m_max) {
  if (m_min == 0) throw std::invalid_argument("at least one market is required");
  if (m_max < m_min) throw std::invalid_argument("m_max must be >= m_min");
  std::vector<StabilityInterval> zones;
  zones.reserve(m_max - m_min + 1);
  for (std::size_t m = m_min; m <= m_max; ++m) zones.push_back(stability_interval(m));
  return zones;
}

}  // namespace oligodyn
