#include "oligodyn/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <utility>

#include "oligodyn/linalg.hpp"

namespace oligodyn {

namespace {

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

void check_parameter_regular(const GameConfig& g) {
  if (1.0 + g.scale == 0.0) {
    throw SingularParameterError("best response undefined at d = -1 (division by zero)");
  }
}

// Synchronous best-response update, no validation.  `cur` and `out` must
// not alias.
void step_into(const GameConfig& g, const StateVector& cur, StateVector& out,
               IterateMode mode) {
  const std::size_t n = g.firms();
  const std::size_t m = g.markets();
  const double denom = 2.0 * (1.0 + g.scale);
  for (std::size_t i = 0; i < n; ++i) {
    const double own_total = cur.firm_total(i);
    for (std::size_t j = 0; j < m; ++j) {
      const double rivals = cur.market_supply(j) - cur.at(i, j);
      const double elsewhere = own_total - cur.at(i, j);
      double q = (g.intercepts[j] - rivals - g.unit_costs[i] - 2.0 * g.scale * elsewhere) / denom;
      if (mode == IterateMode::Clipped && q < 0.0) q = 0.0;
      out.at(i, j) = q;
    }
  }
}

}  // namespace

ValidationReport validate(const GameConfig& g) {
  ValidationReport r;
  const std::size_t n = g.firms();
  const std::size_t m = g.markets();

  if (m == 0) r.hard_violations.push_back("at least one market is required");
  if (n == 0) r.hard_violations.push_back("at least one firm is required");

  bool finite = std::isfinite(g.scale);
  for (double a : g.intercepts) finite = finite && std::isfinite(a);
  for (double c : g.unit_costs) finite = finite && std::isfinite(c);
  if (!finite) {
    r.hard_violations.push_back("all parameters must be finite");
    return r;
  }

  for (std::size_t j = 0; j < m; ++j) {
    if (g.intercepts[j] <= 0.0) {
      char msg[80];
      std::snprintf(msg, sizeof msg, "market %zu: intercept a=%g must be positive", j + 1,
                    g.intercepts[j]);
      r.hard_violations.push_back(msg);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.unit_costs[i] <= 0.0) {
      char msg[80];
      std::snprintf(msg, sizeof msg, "firm %zu: unit cost c=%g must be positive", i + 1,
                    g.unit_costs[i]);
      r.hard_violations.push_back(msg);
    }
  }
  if (m > 0 && n > 0) {
    const double a_min = *std::min_element(g.intercepts.begin(), g.intercepts.end());
    const double c_max = *std::max_element(g.unit_costs.begin(), g.unit_costs.end());
    if (a_min < c_max) {
      char msg[96];
      std::snprintf(msg, sizeof msg,
                    "some intercept (min a=%g) lies below some unit cost (max c=%g)", a_min,
                    c_max);
      r.hard_violations.push_back(msg);
    }
  }
  if (g.scale <= -1.0) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "second-order condition d>-1 violated (d=%g)", g.scale);
    r.hard_violations.push_back(msg);
  }

  if (r.ok() && m > 0 && n > 0) {
    if (g.scale <= -1.0 / (2.0 * static_cast<double>(m))) {
      char msg[112];
      std::snprintf(msg, sizeof msg,
                    "d=%g is at or below -1/(2M)=%g; the interior equilibrium loses "
                    "economic meaning",
                    g.scale, -1.0 / (2.0 * static_cast<double>(m)));
      r.soft_flags.push_back(msg);
    }
    const double a_sum = std::accumulate(g.intercepts.begin(), g.intercepts.end(), 0.0);
    const double c_min = *std::min_element(g.unit_costs.begin(), g.unit_costs.end());
    const double bound = -c_min / (2.0 * a_sum);
    if (g.scale < bound) {
      char msg[112];
      std::snprintf(msg, sizeof msg,
                    "d=%g drives some marginal cost negative (bound %g)", g.scale, bound);
      r.soft_flags.push_back(msg);
    }
  }
  return r;
}

void require_valid(const GameConfig& g) {
  ValidationReport r = validate(g);
  if (!r.ok()) {
    throw ValidationError("invalid configuration: " + joined(r.hard_violations),
                          std::move(r.hard_violations));
  }
}

StateVector::StateVector(std::size_t firms, std::size_t markets, std::vector<double> values)
    : firms_(firms), markets_(markets), q_(std::move(values)) {
  if (q_.size() != firms_ * markets_) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "state has %zu values, expected %zu x %zu", q_.size(),
                  firms_, markets_);
    throw ShapeError(msg);
  }
}

void StateVector::check_index(std::size_t firm, std::size_t market) const {
  if (firm >= firms_ || market >= markets_) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "index (%zu,%zu) out of range for %zu x %zu state", firm,
                  market, firms_, markets_);
    throw std::out_of_range(msg);
  }
}

double& StateVector::at(std::size_t firm, std::size_t market) {
  check_index(firm, market);
  return q_[firm * markets_ + market];
}

double StateVector::at(std::size_t firm, std::size_t market) const {
  check_index(firm, market);
  return q_[firm * markets_ + market];
}

double StateVector::market_supply(std::size_t market) const {
  if (market >= markets_) check_index(0, market);
  double s = 0.0;
  for (std::size_t i = 0; i < firms_; ++i) s += q_[i * markets_ + market];
  return s;
}

double StateVector::firm_total(std::size_t firm) const {
  if (firm >= firms_) check_index(firm, 0);
  double s = 0.0;
  for (std::size_t j = 0; j < markets_; ++j) s += q_[firm * markets_ + j];
  return s;
}

double StateVector::min_value() const {
  double v = 0.0;
  bool first = true;
  for (double q : q_) {
    if (first || q < v) v = q;
    first = false;
  }
  return v;
}

double StateVector::max_abs() const {
  double v = 0.0;
  for (double q : q_) v = std::max(v, std::abs(q));
  return v;
}

bool StateVector::all_finite() const {
  for (double q : q_) {
    if (!std::isfinite(q)) return false;
  }
  return true;
}

std::string to_string(IterateMode mode) {
  return mode == IterateMode::Raw ? "raw" : "clipped";
}

std::string to_string(TrajectoryClass cls) {
  switch (cls) {
    case TrajectoryClass::Feasible: return "Feasible";
    case TrajectoryClass::AdmissibleOnly: return "AdmissibleOnly";
    case TrajectoryClass::Divergent: return "Divergent";
  }
  return "?";
}

std::string to_string(StabilityClass cls) {
  switch (cls) {
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::NeutrallyStable: return "NeutrallyStable";
    case StabilityClass::Unstable: return "Unstable";
  }
  return "?";
}

namespace {

void check_state_shape(const GameConfig& g, const StateVector& s) {
  if (s.firms() != g.firms() || s.markets() != g.markets()) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "state is %zu x %zu but the game has %zu firms, %zu markets",
                  s.firms(), s.markets(), g.firms(), g.markets());
    throw ShapeError(msg);
  }
  if (!s.all_finite()) throw std::invalid_argument("state quantities must be finite");
}

}  // namespace

double price(const GameConfig& g, const StateVector& s, std::size_t market) {
  require_valid(g);
  check_state_shape(g, s);
  if (market >= g.markets()) throw std::out_of_range("market index out of range");
  return g.intercepts[market] - s.market_supply(market);
}

double firm_cost(const GameConfig& g, const StateVector& s, std::size_t firm) {
  require_valid(g);
  check_state_shape(g, s);
  if (firm >= g.firms()) throw std::out_of_range("firm index out of range");
  const double total = s.firm_total(firm);
  return g.unit_costs[firm] * total + g.scale * total * total;
}

double profit(const GameConfig& g, const StateVector& s, std::size_t firm) {
  require_valid(g);
  check_state_shape(g, s);
  if (firm >= g.firms()) throw std::out_of_range("firm index out of range");
  double revenue = 0.0;
  for (std::size_t j = 0; j < g.markets(); ++j) {
    revenue += s.at(firm, j) * (g.intercepts[j] - s.market_supply(j));
  }
  const double total = s.firm_total(firm);
  return revenue - (g.unit_costs[firm] * total + g.scale * total * total);
}

double best_response(const GameConfig& g, const StateVector& s, std::size_t firm,
                     std::size_t market) {
  check_parameter_regular(g);
  require_valid(g);
  check_state_shape(g, s);
  if (firm >= g.firms()) throw std::out_of_range("firm index out of range");
  if (market >= g.markets()) throw std::out_of_range("market index out of range");
  const double rivals = s.market_supply(market) - s.at(firm, market);
  const double elsewhere = s.firm_total(firm) - s.at(firm, market);
  return (g.intercepts[market] - rivals - g.unit_costs[firm] -
          2.0 * g.scale * elsewhere) /
         (2.0 * (1.0 + g.scale));
}

StateVector step(const GameConfig& g, const StateVector& s, IterateMode mode) {
  check_parameter_regular(g);
  require_valid(g);
  check_state_shape(g, s);
  StateVector out(g.firms(), g.markets());
  step_into(g, s, out, mode);
  return out;
}

Trajectory simulate(const GameConfig& g, const StateVector& initial, int steps,
                    IterateMode mode) {
  check_parameter_regular(g);
  require_valid(g);
  check_state_shape(g, initial);
  if (steps < 1) throw std::invalid_argument("T must be >= 1");

  Trajectory traj;
  traj.mode = mode;
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.push_back(initial);

  bool negative = initial.min_value() < 0.0;
  bool divergent = false;
  StateVector next(g.firms(), g.markets());
  for (int t = 0; t < steps; ++t) {
    step_into(g, traj.states.back(), next, mode);
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

StateVector default_initial_state(const GameConfig& g) {
  check_parameter_regular(g);
  require_valid(g);
  const std::size_t n = g.firms();
  const std::size_t m = g.markets();
  StateVector s(n, m);
  const double denom = 2.0 * (1.0 + g.scale) * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      s.at(i, j) = (g.intercepts[j] - g.unit_costs[i]) / denom;
    }
  }
  return s;
}

StateVector nash_duopoly_closed_form(const GameConfig& g) {
  if (g.firms() != 2) {
    char msg[80];
    std::snprintf(msg, sizeof msg, "closed form needs exactly 2 firms, got %zu", g.firms());
    throw ShapeError(msg);
  }
  require_valid(g);

  const double m = static_cast<double>(g.markets());
  const double d = g.scale;
  const double f1 = 2.0 * m * d + 1.0;
  const double f3 = 2.0 * m * d + 3.0;
  if (std::abs(f1) < kSingularFactorTol || std::abs(f3) < kSingularFactorTol) {
    char msg[128];
    std::snprintf(msg, sizeof msg,
                  "closed form singular at d=%.17g (2Md+1=%.3g, 2Md+3=%.3g)", d, f1, f3);
    throw SingularParameterError(msg);
  }
  const double den = f1 * f3;
  const double a_bar =
      std::accumulate(g.intercepts.begin(), g.intercepts.end(), 0.0) / m;

  StateVector s(2, g.markets());
  for (std::size_t i = 0; i < 2; ++i) {
    const double ci = g.unit_costs[i];
    const double ck = g.unit_costs[1 - i];
    for (std::size_t j = 0; j < g.markets(); ++j) {
      const double aj = g.intercepts[j];
      const double base = ((aj - ci) * f1 + (ck - ci)) / den;
      const double tilt =
          (2.0 / 3.0) * m * (aj - a_bar) * (2.0 * m * d * d + d) / den;
      s.at(i, j) = base + tilt;
    }
  }
  return s;
}

StateVector nash_linear_solve(const GameConfig& g) {
  check_parameter_regular(g);
  require_valid(g);
  const std::size_t n = g.firms();
  const std::size_t m = g.markets();
  const std::size_t size = n * m;

  // Stacked first-order conditions: for each (i, j),
  //   Q_j + q_ij + 2 d Q_i = a_j - c_i.
  DenseMatrix a(size);
  std::vector<double> b(size);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t row = i * m + j;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          double v = 0.0;
          if (l == j) v += 1.0;
          if (k == i) v += 2.0 * g.scale;
          if (k == i && l == j) v += 1.0;
          if (v != 0.0) a(row, k * m + l) = v;
        }
      }
      b[row] = g.intercepts[j] - g.unit_costs[i];
    }
  }

  std::vector<double> x;
  try {
    x = solve_linear(a, std::move(b));
  } catch (const SingularMatrixError&) {
    char msg[112];
    std::snprintf(msg, sizeof msg,
                  "equilibrium system singular at d=%.17g (firms=%zu, markets=%zu)",
                  g.scale, n, m);
    throw SingularSystemError(msg);
  }
  return StateVector(n, m, std::move(x));
}

}  // namespace oligodyn
