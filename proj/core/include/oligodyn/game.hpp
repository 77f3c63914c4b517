#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oligodyn/errors.hpp"

namespace oligodyn {

/// N firms selling one homogeneous good in M separate markets.  Market j
/// clears at price a_j - Q_j where Q_j is the total quantity offered
/// there.  Firm i pays c_i per unit plus a quadratic term d * (total
/// output)^2 that couples its decisions across markets: d < 0 models
/// economies of scale, d > 0 diseconomies.
struct GameConfig {
  std::vector<double> intercepts;  // demand intercept a_j per market
  std::vector<double> unit_costs;  // linear cost c_i per firm
  double scale = 0.0;              // quadratic cost coefficient d

  std::size_t markets() const { return intercepts.size(); }
  std::size_t firms() const { return unit_costs.size(); }

  bool operator==(const GameConfig&) const = default;
};

struct ValidationReport {
  std::vector<std::string> hard_violations;
  std::vector<std::string> soft_flags;

  bool ok() const { return hard_violations.empty(); }
};

/// Checks a configuration.  Hard violations (nonpositive intercepts or
/// costs, an intercept below some firm's unit cost, d <= -1, nonfinite or
/// empty input) make the config unusable; soft flags mark parameter
/// regions where the equilibrium is known to lose economic meaning but
/// the dynamics are still well defined.
ValidationReport validate(const GameConfig& config);

/// Throws ValidationError listing every violated hard rule.
void require_valid(const GameConfig& config);

/// Quantity grid q[firm][market], stored firm-major.
class StateVector {
 public:
  StateVector() = default;
  StateVector(std::size_t firms, std::size_t markets, double fill = 0.0)
      : firms_(firms), markets_(markets), q_(firms * markets, fill) {}
  StateVector(std::size_t firms, std::size_t markets, std::vector<double> values);

  std::size_t firms() const { return firms_; }
  std::size_t markets() const { return markets_; }

  double& at(std::size_t firm, std::size_t market);
  double at(std::size_t firm, std::size_t market) const;

  const std::vector<double>& values() const { return q_; }

  /// Total quantity offered in one market (column sum).
  double market_supply(std::size_t market) const;
  /// Total output of one firm across all markets (row sum).
  double firm_total(std::size_t firm) const;

  double min_value() const;
  double max_abs() const;
  bool all_finite() const;

  bool operator==(const StateVector&) const = default;

 private:
  void check_index(std::size_t firm, std::size_t market) const;

  std::size_t firms_ = 0;
  std::size_t markets_ = 0;
  std::vector<double> q_;
};

enum class IterateMode { Raw, Clipped };

/// Feasible: every visited state is componentwise nonnegative.
/// AdmissibleOnly: finite throughout but some quantity went negative.
/// Divergent: some |q| exceeded kDivergenceThreshold; iteration stops.
enum class TrajectoryClass { Feasible, AdmissibleOnly, Divergent };

/// Local stability verdict for an equilibrium of a discrete map, decided
/// by the spectral radius of the map's Jacobian there.
enum class StabilityClass { Stable, NeutrallyStable, Unstable };

std::string to_string(IterateMode mode);
std::string to_string(TrajectoryClass cls);
std::string to_string(StabilityClass cls);

inline constexpr double kDivergenceThreshold = 1e12;

/// Denominator guard for the closed-form duopoly equilibrium.
inline constexpr double kSingularFactorTol = 1e-9;

struct Trajectory {
  std::vector<StateVector> states;  // states[0] is the initial condition
  TrajectoryClass classification = TrajectoryClass::Feasible;
  IterateMode mode = IterateMode::Raw;

  std::size_t steps() const { return states.empty() ? 0 : states.size() - 1; }
};

/// Market-clearing price a_j - Q_j.
double price(const GameConfig& config, const StateVector& state, std::size_t market);

/// Total cost of one firm: c_i * Q_i + d * Q_i^2.
double firm_cost(const GameConfig& config, const StateVector& state, std::size_t firm);

/// Profit of one firm: revenue across all markets minus total cost.
double profit(const GameConfig& config, const StateVector& state, std::size_t firm);

/// Profit-maximizing quantity of one firm in one market, holding every
/// other quantity (its own in other markets included) at the given state.
double best_response(const GameConfig& config, const StateVector& state,
                     std::size_t firm, std::size_t market);

/// One synchronous best-response update of every (firm, market) cell.
/// Clipped mode replaces negative responses with zero.
StateVector step(const GameConfig& config, const StateVector& state, IterateMode mode);

/// Iterates the map for `steps` periods from the given initial state and
/// records every visited state.  Iteration stops early when a quantity
/// magnitude crosses kDivergenceThreshold; the trajectory is then marked
/// Divergent.
Trajectory simulate(const GameConfig& config, const StateVector& initial,
                    int steps, IterateMode mode);

/// Canonical starting point: each firm best-responds to empty markets and
/// spreads the result over the N competitors, q0[i][j] = (a_j - c_i) / (2 (1 + d) N).
StateVector default_initial_state(const GameConfig& config);

/// Interior Nash equilibrium of a two-firm game in closed form.  Requires
/// exactly two firms; raises SingularParameterError when d is within
/// kSingularFactorTol of -1/(2M) or -3/(2M), where the formula's
/// denominator (2Md+1)(2Md+3) vanishes.
StateVector nash_duopoly_closed_form(const GameConfig& config);

/// Interior Nash equilibrium for any firm count, obtained by solving the
/// stacked first-order conditions as one linear system.  A singular
/// system raises SingularSystemError naming the offending d.
StateVector nash_linear_solve(const GameConfig& config);

}  // namespace oligodyn
