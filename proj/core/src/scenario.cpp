#include "oligodyn/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace oligodyn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ScenarioError(origin + ": " + msg);
}

std::pair<int, int> line_col(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& origin, const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(origin, "unknown key \"" + it.key() + "\" in " + where);
  }
}

double get_number(const json& v, const std::string& origin, const std::string& what) {
  if (!v.is_number()) fail(origin, what + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(origin, what + " must be finite");
  return x;
}

long long get_integer(const json& v, const std::string& origin, const std::string& what) {
  if (!v.is_number_integer()) fail(origin, what + " must be an integer");
  return v.get<long long>();
}

}  // namespace

Scenario parse_scenario_text(std::string_view text, std::string_view origin_view) {
  const std::string origin(origin_view);

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    char pos[64];
    std::snprintf(pos, sizeof pos, "parse error at line %d, column %d", line, col);
    fail(origin, std::string(pos) + " (" + e.what() + ")");
  }

  if (!doc.is_object()) fail(origin, "top level must be an object");
  check_keys(doc, {"markets", "firms", "d", "simulation"}, origin, "scenario");
  for (const char* required : {"markets", "firms", "d"}) {
    if (!doc.contains(required)) fail(origin, std::string("missing key \"") + required + "\"");
  }

  Scenario scenario;

  const json& markets = doc["markets"];
  if (!markets.is_array() || markets.empty()) {
    fail(origin, "\"markets\" must be a nonempty array");
  }
  for (std::size_t j = 0; j < markets.size(); ++j) {
    const json& entry = markets[j];
    if (!entry.is_object()) fail(origin, "every market entry must be an object");
    check_keys(entry, {"a"}, origin, "a market entry");
    if (!entry.contains("a")) fail(origin, "missing key \"a\" in a market entry");
    char what[48];
    std::snprintf(what, sizeof what, "markets[%zu].a", j);
    scenario.config.intercepts.push_back(get_number(entry["a"], origin, what));
  }

  const json& firms = doc["firms"];
  if (!firms.is_array() || firms.empty()) fail(origin, "\"firms\" must be a nonempty array");
  for (std::size_t i = 0; i < firms.size(); ++i) {
    const json& entry = firms[i];
    if (!entry.is_object()) fail(origin, "every firm entry must be an object");
    check_keys(entry, {"c"}, origin, "a firm entry");
    if (!entry.contains("c")) fail(origin, "missing key \"c\" in a firm entry");
    char what[48];
    std::snprintf(what, sizeof what, "firms[%zu].c", i);
    scenario.config.unit_costs.push_back(get_number(entry["c"], origin, what));
  }

  scenario.config.scale = get_number(doc["d"], origin, "\"d\"");

  if (doc.contains("simulation")) {
    const json& sim = doc["simulation"];
    if (!sim.is_object()) fail(origin, "\"simulation\" must be an object");
    check_keys(sim, {"T", "mode", "initial", "transient", "samples"}, origin,
               "the simulation block");

    if (sim.contains("T")) {
      const long long t = get_integer(sim["T"], origin, "simulation.T");
      if (t < 1) fail(origin, "T must be >= 1");
      scenario.simulation.steps = static_cast<int>(t);
    }
    if (sim.contains("mode")) {
      const json& mode = sim["mode"];
      if (!mode.is_string()) fail(origin, "simulation.mode must be a string");
      const std::string name = mode.get<std::string>();
      if (name == "raw") {
        scenario.simulation.mode = IterateMode::Raw;
      } else if (name == "clipped") {
        scenario.simulation.mode = IterateMode::Clipped;
      } else {
        fail(origin, "simulation.mode must be \"raw\" or \"clipped\", got \"" + name + "\"");
      }
    }
    if (sim.contains("transient")) {
      const long long v = get_integer(sim["transient"], origin, "simulation.transient");
      if (v < 0) fail(origin, "simulation.transient must be >= 0");
      scenario.simulation.transient = static_cast<std::size_t>(v);
    }
    if (sim.contains("samples")) {
      const long long v = get_integer(sim["samples"], origin, "simulation.samples");
      if (v < 1) fail(origin, "simulation.samples must be >= 1");
      scenario.simulation.samples = static_cast<std::size_t>(v);
    }
    if (sim.contains("initial")) {
      const json& init = sim["initial"];
      const std::size_t n = scenario.config.firms();
      const std::size_t m = scenario.config.markets();
      if (!init.is_array() || init.size() != n) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "simulation.initial must be an array of %zu firm rows",
                      n);
        fail(origin, msg);
      }
      std::vector<double> q;
      q.reserve(n * m);
      for (std::size_t i = 0; i < n; ++i) {
        const json& row = init[i];
        if (!row.is_array() || row.size() != m) {
          char msg[96];
          std::snprintf(msg, sizeof msg,
                        "simulation.initial[%zu] must be an array of %zu quantities", i, m);
          fail(origin, msg);
        }
        for (std::size_t j = 0; j < m; ++j) {
          char what[64];
          std::snprintf(what, sizeof what, "simulation.initial[%zu][%zu]", i, j);
          const double v = get_number(row[j], origin, what);
          if (v < 0.0) fail(origin, std::string(what) + " must be nonnegative");
          q.push_back(v);
        }
      }
      scenario.simulation.initial = StateVector(n, m, std::move(q));
    }
  }

  scenario.report = validate(scenario.config);
  if (!scenario.report.ok()) {
    std::string msg = origin + ": invalid configuration: ";
    for (std::size_t i = 0; i < scenario.report.hard_violations.size(); ++i) {
      if (i) msg += "; ";
      msg += scenario.report.hard_violations[i];
    }
    throw ValidationError(msg, scenario.report.hard_violations);
  }
  return scenario;
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open scenario file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path.string());
}

}  // namespace oligodyn
