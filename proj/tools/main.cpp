// Command line front end: every subcommand loads a scenario (where one is
// needed), runs the matching command and reports where the artifacts went.
//
// Exit codes: 0 success, 1 usage or parse error, 2 scenario validation
// failure, 3 numerical failure (singular system, no convergence).

#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "oligodyn/commands.hpp"

namespace {

using namespace oligodyn;

std::optional<IterateMode> parse_mode(const std::string& name) {
  if (name.empty()) return {};
  if (name == "raw") return IterateMode::Raw;
  if (name == "clipped") return IterateMode::Clipped;
  throw std::invalid_argument("mode must be \"raw\" or \"clipped\", got \"" + name + "\"");
}

Scenario load_scenario(const std::string& path) {
  Scenario sc = parse_scenario(path);
  for (const std::string& flag : sc.report.soft_flags) {
    std::fprintf(stderr, "warning: %s\n", flag.c_str());
  }
  return sc;
}

void print_artifacts(const RunArtifacts& artifacts) {
  for (const std::string& name : artifacts.files) {
    std::printf("wrote %s\n", (artifacts.directory / name).string().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic multi-market Cournot dynamics laboratory"};
  app.set_version_flag("--version", "oligodyn 0.1.0");
  app.require_subcommand(1);

  std::string scenario_path, out_dir, mode_name;
  bool svg = false;
  int steps = 0;
  double d_lo = 0.0, d_hi = 0.0;
  long long points = 1000, transient = -1, samples = -1;
  std::size_t m_min = 1, m_max = 1, threads = 0;

  auto* simulate_cmd =
      app.add_subcommand("simulate", "iterate the map and emit the trajectory");
  auto* equilibrium_cmd =
      app.add_subcommand("equilibrium", "compute the Nash equilibrium point");
  auto* stability_cmd =
      app.add_subcommand("stability", "spectral stability verdict for the equilibrium");
  auto* bifurcate_cmd =
      app.add_subcommand("bifurcate", "sweep d and record post-transient orbit samples");
  auto* zone_cmd =
      app.add_subcommand("zone", "stable d interval per market count");
  auto* compare_cmd =
      app.add_subcommand("compare", "run the map next to its single-market baseline");

  for (CLI::App* cmd : {simulate_cmd, equilibrium_cmd, stability_cmd, bifurcate_cmd, compare_cmd}) {
    cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  }
  for (CLI::App* cmd : {simulate_cmd, equilibrium_cmd, stability_cmd, bifurcate_cmd, zone_cmd, compare_cmd}) {
    cmd->add_option("--out", out_dir, "artifact output directory")->required();
  }
  for (CLI::App* cmd : {simulate_cmd, bifurcate_cmd, compare_cmd}) {
    cmd->add_option("--mode", mode_name, "iteration mode: raw or clipped");
    cmd->add_flag("--svg", svg, "also emit an SVG chart");
  }
  zone_cmd->add_flag("--svg", svg, "also emit an SVG chart");
  for (CLI::App* cmd : {simulate_cmd, compare_cmd}) {
    cmd->add_option("--steps", steps, "number of map iterations T");
  }

  bifurcate_cmd->add_option("--d-lo", d_lo, "lower end of the d sweep")->required();
  bifurcate_cmd->add_option("--d-hi", d_hi, "upper end of the d sweep")->required();
  bifurcate_cmd->add_option("--points", points, "grid points across [d-lo, d-hi]");
  bifurcate_cmd->add_option("--transient", transient, "discarded steps per grid point");
  bifurcate_cmd->add_option("--samples", samples, "recorded steps per grid point");
  bifurcate_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  zone_cmd->add_option("--m-min", m_min, "smallest market count")->required();
  zone_cmd->add_option("--m-max", m_max, "largest market count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    OutputOptions out{out_dir, svg};

    if (*simulate_cmd) {
      Scenario sc = load_scenario(scenario_path);
      std::optional<int> t;
      if (simulate_cmd->count("--steps")) t = steps;
      SimulateOutcome res = cmd_simulate(sc, out, t, parse_mode(mode_name));
      std::printf("classification: %s after %zu steps\n",
                  to_string(res.classification).c_str(), res.steps);
      print_artifacts(res.artifacts);
    } else if (*equilibrium_cmd) {
      Scenario sc = load_scenario(scenario_path);
      EquilibriumOutcome res = cmd_equilibrium(sc, out);
      for (std::size_t i = 0; i < res.equilibrium.firms(); ++i) {
        for (std::size_t j = 0; j < res.equilibrium.markets(); ++j) {
          std::printf("q[%zu][%zu] = %.10g\n", i + 1, j + 1, res.equilibrium.at(i, j));
        }
      }
      print_artifacts(res.artifacts);
    } else if (*stability_cmd) {
      Scenario sc = load_scenario(scenario_path);
      StabilityOutcome res = cmd_stability(sc, out);
      std::printf("%s\n", res.summary.c_str());
      print_artifacts(res.artifacts);
    } else if (*bifurcate_cmd) {
      Scenario sc = load_scenario(scenario_path);
      BifurcationOptions opt;
      opt.d_lo = d_lo;
      opt.d_hi = d_hi;
      if (points < 2) throw std::invalid_argument("scan needs at least 2 grid points");
      opt.points = static_cast<std::size_t>(points);
      if (bifurcate_cmd->count("--transient")) {
        if (transient < 0) throw std::invalid_argument("transient must be >= 0");
        opt.transient = static_cast<std::size_t>(transient);
      } else if (sc.simulation.transient) {
        opt.transient = *sc.simulation.transient;
      }
      if (bifurcate_cmd->count("--samples")) {
        if (samples < 1) throw std::invalid_argument("scan needs at least 1 sample");
        opt.samples = static_cast<std::size_t>(samples);
      } else if (sc.simulation.samples) {
        opt.samples = *sc.simulation.samples;
      }
      if (auto m = parse_mode(mode_name)) opt.mode = *m;
      opt.initial = sc.simulation.initial;
      opt.threads = threads;
      BifurcateOutcome res = cmd_bifurcate(sc, out, opt);
      std::size_t divergent = 0;
      for (const BifurcationCell& cell : res.data.cells) divergent += cell.divergent;
      std::printf("cells: %zu (divergent: %zu)\n", res.data.cells.size(), divergent);
      print_artifacts(res.artifacts);
    } else if (*zone_cmd) {
      ZoneOutcome res = cmd_zone(m_min, m_max, out);
      for (const StabilityInterval& z : res.intervals) {
        std::printf("m=%zu: (%g, %g)\n", z.markets, z.d_lower, z.d_upper);
      }
      print_artifacts(res.artifacts);
    } else if (*compare_cmd) {
      Scenario sc = load_scenario(scenario_path);
      std::optional<int> t;
      if (compare_cmd->count("--steps")) t = steps;
      CompareOutcome res = cmd_compare(sc, out, t, parse_mode(mode_name));
      std::printf("retail: %s\n", to_string(res.retail).c_str());
      for (std::size_t j = 0; j < res.fisher.size(); ++j) {
        std::printf("fisher market %zu: %s\n", j + 1, to_string(res.fisher[j]).c_str());
      }
      print_artifacts(res.artifacts);
    }
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const SingularParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const SingularSystemError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const SingularMatrixError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const NotSymmetricError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const NoConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
