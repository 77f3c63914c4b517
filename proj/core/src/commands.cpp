#include "oligodyn/commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "oligodyn/baseline.hpp"
#include "oligodyn/svg.hpp"

namespace oligodyn {

namespace {

const char* const kRetailColor = "#1f77b4";
const char* const kFisherColor = "#d62728";
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_number(values[i]);
  }
  return out;
}

std::string config_token(const GameConfig& g) {
  return "a=" + join_numbers(g.intercepts) + ";c=" + join_numbers(g.unit_costs) +
         ";d=" + format_number(g.scale);
}

std::string state_token(const StateVector& s) {
  return join_numbers(s.values());
}

std::string cell_label(std::size_t firm, std::size_t market) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "firm %zu, market %zu", firm + 1, market + 1);
  return buf;
}

std::string equilibrium_csv(const StateVector& nash) {
  std::string csv = "firm,market,quantity\n";
  for (std::size_t i = 0; i < nash.firms(); ++i) {
    for (std::size_t j = 0; j < nash.markets(); ++j) {
      csv += std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
             format_number(nash.at(i, j)) + "\n";
    }
  }
  return csv;
}

int resolve_steps(const Scenario& sc, std::optional<int> steps, int fallback) {
  const int t = steps.value_or(sc.simulation.steps.value_or(fallback));
  if (t < 1) throw std::invalid_argument("T must be >= 1");
  return t;
}

IterateMode resolve_mode(const Scenario& sc, std::optional<IterateMode> mode) {
  return mode.value_or(sc.simulation.mode.value_or(IterateMode::Raw));
}

StateVector resolve_initial(const Scenario& sc) {
  return sc.simulation.initial ? *sc.simulation.initial
                               : default_initial_state(sc.config);
}

}  // namespace

SimulateOutcome cmd_simulate(const Scenario& sc, const OutputOptions& out,
                             std::optional<int> steps, std::optional<IterateMode> mode) {
  const GameConfig& g = sc.config;
  const int t_max = resolve_steps(sc, steps, 100);
  const IterateMode m = resolve_mode(sc, mode);
  const StateVector initial = resolve_initial(sc);

  const Trajectory traj = simulate(g, initial, t_max, m);
  const StateVector nash = nash_linear_solve(g);

  ArtifactWriter writer(out.directory, "simulate");
  writer.add_input(config_token(g));
  writer.add_input("T=" + std::to_string(t_max));
  writer.add_input("mode=" + to_string(m));
  writer.add_input("initial=" + state_token(initial));

  std::string csv = "step,firm,market,quantity\n";
  for (std::size_t t = 0; t < traj.states.size(); ++t) {
    for (std::size_t i = 0; i < g.firms(); ++i) {
      for (std::size_t j = 0; j < g.markets(); ++j) {
        csv += std::to_string(t) + "," + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + "," + format_number(traj.states[t].at(i, j)) + "\n";
      }
    }
  }
  writer.write_file("trajectory.csv", csv);
  writer.write_file("equilibrium.csv", equilibrium_csv(nash));

  if (out.svg) {
    Chart chart("quantity paths (" + to_string(m) + ")", "step", "quantity");
    std::size_t color = 0;
    for (std::size_t i = 0; i < g.firms(); ++i) {
      for (std::size_t j = 0; j < g.markets(); ++j) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(traj.states.size());
        for (std::size_t t = 0; t < traj.states.size(); ++t) {
          pts.emplace_back(static_cast<double>(t), traj.states[t].at(i, j));
        }
        chart.add_line(cell_label(i, j), kPalette[color % 8], std::move(pts));
        ++color;
      }
    }
    for (std::size_t i = 0; i < g.firms(); ++i) {
      for (std::size_t j = 0; j < g.markets(); ++j) {
        chart.add_hline(nash.at(i, j), "#999999");
      }
    }
    writer.write_file("trajectory.svg", chart.render());
  }

  return {writer.finish(), traj.classification, traj.steps()};
}

EquilibriumOutcome cmd_equilibrium(const Scenario& sc, const OutputOptions& out) {
  const StateVector nash = nash_linear_solve(sc.config);

  ArtifactWriter writer(out.directory, "equilibrium");
  writer.add_input(config_token(sc.config));
  writer.write_file("equilibrium.csv", equilibrium_csv(nash));
  return {writer.finish(), nash};
}

StabilityOutcome cmd_stability(const Scenario& sc, const OutputOptions& out) {
  const SpectrumReport report = classify_stability(sc.config);
  std::optional<StabilityInterval> interval;
  if (sc.config.firms() == 2) interval = stability_interval(sc.config.markets());

  char line[160];
  if (interval) {
    std::snprintf(line, sizeof line, "%s, rho=%g, interval=(%g, %g)",
                  to_string(report.stability).c_str(), report.spectral_radius,
                  interval->d_lower, interval->d_upper);
  } else {
    std::snprintf(line, sizeof line, "%s, rho=%g", to_string(report.stability).c_str(),
                  report.spectral_radius);
  }

  ArtifactWriter writer(out.directory, "stability");
  writer.add_input(config_token(sc.config));

  std::string csv = "index,lambda\n";
  for (std::size_t k = 0; k < report.eigenvalues.size(); ++k) {
    csv += std::to_string(k + 1) + "," + format_number(report.eigenvalues[k]) + "\n";
  }
  writer.write_file("eigen.csv", csv);

  return {writer.finish(), report, interval, line};
}

BifurcateOutcome cmd_bifurcate(const Scenario& sc, const OutputOptions& out,
                               const BifurcationOptions& options) {
  const BifurcationData data = bifurcation_scan(sc.config, options);

  ArtifactWriter writer(out.directory, "bifurcate");
  writer.add_input(config_token(sc.config));
  writer.add_input("d_lo=" + format_number(options.d_lo));
  writer.add_input("d_hi=" + format_number(options.d_hi));
  writer.add_input("points=" + std::to_string(options.points));
  writer.add_input("transient=" + std::to_string(options.transient));
  writer.add_input("samples=" + std::to_string(options.samples));
  writer.add_input("mode=" + to_string(options.mode));
  if (options.initial) writer.add_input("initial=" + state_token(*options.initial));

  std::string csv = "d,firm,market,quantity\n";
  for (const BifurcationCell& cell : data.cells) {
    const std::string d_str = format_number(cell.d);
    for (std::size_t i = 0; i < data.firms; ++i) {
      for (std::size_t j = 0; j < data.markets; ++j) {
        if (cell.divergent) {
          csv += d_str + "," + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ",divergent\n";
        } else {
          const auto& series = cell.samples[i * data.markets + j];
          for (double q : series) {
            csv += d_str + "," + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                   format_number(q) + "\n";
          }
        }
      }
    }
  }
  writer.write_file("bifurcation.csv", csv);

  if (out.svg) {
    Chart chart("orbit samples, firm 1, market 1 (" + to_string(options.mode) + ")", "d",
                "quantity");
    std::vector<std::pair<double, double>> pts;
    for (const BifurcationCell& cell : data.cells) {
      if (cell.divergent) continue;
      for (double q : cell.samples[0]) pts.emplace_back(cell.d, q);
    }
    chart.add_scatter("", kRetailColor, std::move(pts));
    writer.write_file("bifurcation.svg", chart.render());
  }

  return {writer.finish(), data};
}

ZoneOutcome cmd_zone(std::size_t m_min, std::size_t m_max, const OutputOptions& out) {
  const std::vector<StabilityInterval> zones = stability_zone_scan(m_min, m_max);

  ArtifactWriter writer(out.directory, "zone");
  writer.add_input("m_min=" + std::to_string(m_min));
  writer.add_input("m_max=" + std::to_string(m_max));

  std::string csv = "m,d_lower,d_upper\n";
  for (const StabilityInterval& z : zones) {
    csv += std::to_string(z.markets) + "," + format_number(z.d_lower) + "," +
           format_number(z.d_upper) + "\n";
  }
  writer.write_file("zone.csv", csv);

  if (out.svg) {
    Chart chart("stable range of d by market count", "d", "m");
    // unbounded upper ends are drawn truncated at d = 1
    for (std::size_t k = 0; k < zones.size(); ++k) {
      const StabilityInterval& z = zones[k];
      const double hi = std::isinf(z.d_upper) ? 1.0 : z.d_upper;
      chart.add_line(k == 0 ? "stable interval" : "", "#2ca02c",
                     {{z.d_lower, static_cast<double>(z.markets)},
                      {hi, static_cast<double>(z.markets)}});
    }
    writer.write_file("zone.svg", chart.render());
  }

  return {writer.finish(), zones};
}

CompareOutcome cmd_compare(const Scenario& sc, const OutputOptions& out,
                           std::optional<int> steps, std::optional<IterateMode> mode) {
  const GameConfig& g = sc.config;
  const int t_max = resolve_steps(sc, steps, 100);
  const IterateMode m = resolve_mode(sc, mode);
  const StateVector initial = resolve_initial(sc);

  const Trajectory retail = simulate(g, initial, t_max, m);

  std::vector<Trajectory> fisher;
  fisher.reserve(g.markets());
  for (std::size_t j = 0; j < g.markets(); ++j) {
    BaselineConfig base;
    base.intercept = g.intercepts[j];
    base.unit_costs = g.unit_costs;
    base.scale = g.scale;
    std::vector<double> column(g.firms());
    for (std::size_t i = 0; i < g.firms(); ++i) column[i] = initial.at(i, j);
    fisher.push_back(fisher_trajectory(base, column, t_max));
  }

  ArtifactWriter writer(out.directory, "compare");
  writer.add_input(config_token(g));
  writer.add_input("T=" + std::to_string(t_max));
  writer.add_input("mode=" + to_string(m));
  writer.add_input("initial=" + state_token(initial));

  std::string csv = "step,model,firm,market,quantity\n";
  for (std::size_t t = 0; t <= static_cast<std::size_t>(t_max); ++t) {
    if (t < retail.states.size()) {
      for (std::size_t i = 0; i < g.firms(); ++i) {
        for (std::size_t j = 0; j < g.markets(); ++j) {
          csv += std::to_string(t) + ",retail," + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "," + format_number(retail.states[t].at(i, j)) +
                 "\n";
        }
      }
    }
    for (std::size_t i = 0; i < g.firms(); ++i) {
      for (std::size_t j = 0; j < g.markets(); ++j) {
        if (t < fisher[j].states.size()) {
          csv += std::to_string(t) + ",fisher," + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "," + format_number(fisher[j].states[t].at(i, 0)) +
                 "\n";
        }
      }
    }
  }
  writer.write_file("compare.csv", csv);

  if (out.svg) {
    Chart chart("retail vs fisher, firm 1, market 1", "step", "quantity");
    std::vector<std::pair<double, double>> rp, fp;
    for (std::size_t t = 0; t < retail.states.size(); ++t) {
      rp.emplace_back(static_cast<double>(t), retail.states[t].at(0, 0));
    }
    for (std::size_t t = 0; t < fisher[0].states.size(); ++t) {
      fp.emplace_back(static_cast<double>(t), fisher[0].states[t].at(0, 0));
    }
    chart.add_line("retail", kRetailColor, std::move(rp));
    chart.add_line("fisher", kFisherColor, std::move(fp));
    writer.write_file("compare.svg", chart.render());
  }

  CompareOutcome outcome;
  outcome.retail = retail.classification;
  for (const Trajectory& traj : fisher) outcome.fisher.push_back(traj.classification);
  outcome.artifacts = writer.finish();
  return outcome;
}

}  // namespace oligodyn
