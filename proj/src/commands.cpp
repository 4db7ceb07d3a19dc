#include "frontstab/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <vector>

#include "frontstab/acceptance.hpp"
#include "frontstab/config.hpp"
#include "frontstab/dispersion.hpp"
#include "frontstab/errors.hpp"
#include "frontstab/io.hpp"
#include "frontstab/simulator.hpp"
#include "frontstab/sweeps.hpp"
#include "frontstab/wave.hpp"

#ifndef FRONTSTAB_VERSION
#define FRONTSTAB_VERSION "unknown"
#endif

namespace frontstab {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Outcome {
  int status = 0;
  json constants;  // null when the command has no single (alpha, theta)
  json results = json::object();
};

// Reads params[key] as T, falling back to a default; rejects wrong types.
template <typename T>
T param(const json& params, const char* key, T fallback) {
  if (!params.contains(key) || params.at(key).is_null()) return fallback;
  try {
    return params.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("parameter '") + key + "' has the wrong type");
  }
}

template <typename T>
T required(const json& params, const char* key) {
  if (!params.contains(key) || params.at(key).is_null()) {
    throw ConfigError(std::string("missing required parameter '") + key + "'");
  }
  return param<T>(params, key, T{});
}

json constants_json(const ModelParams& p) {
  const auto w = wave_constants(p);
  return {{"sigma", w.sigma}, {"beta", w.beta}, {"lambda_decay", w.lambda_decay}, {"b", w.b}};
}

std::string cell(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

Outcome cmd_wave(const json& params, const fs::path& out, std::ostream& log) {
  const ModelParams p{required<double>(params, "alpha"), required<double>(params, "theta")};
  const double xmin = param<double>(params, "xmin", -5.0);
  const double xmax = param<double>(params, "xmax", 5.0);
  const int n = param<int>(params, "n", 1001);
  validate(p);
  if (n < 2) throw ConfigError("n must be at least 2");
  if (!(xmin < xmax)) throw ConfigError("xmin must be less than xmax");

  CsvWriter wave(out / "wave.csv", {"x", "u0", "v0"});
  for (double x : linspace(xmin, xmax, n)) {
    const auto s = eval_profile(p, x);
    wave.row({s.x, s.u0, s.v0});
  }
  const auto w = wave_constants(p);
  CsvWriter constants(out / "constants.csv", {"sigma", "beta", "lambda_decay", "b"});
  constants.row({w.sigma, w.beta, w.lambda_decay, w.b});
  log << "sigma = " << format_double(w.sigma) << "\nbeta = " << format_double(w.beta)
      << "\nlambda_decay = " << format_double(w.lambda_decay) << "\nb = " << format_double(w.b) << '\n';
  return {0, constants_json(p), json::object()};
}

Outcome cmd_dispersion(const json& params, const fs::path& out, std::ostream& log) {
  const ModelParams p{required<double>(params, "alpha"), required<double>(params, "theta")};
  const double omega_max = param<double>(params, "omega_max", 20.0);
  const int n = param<int>(params, "n", 401);
  const double search_max = param<double>(params, "search_max", 10.0);
  validate(p);
  if (n < 1) throw ConfigError("n must be at least 1");
  if (!(omega_max >= 0.0)) throw ConfigError("omega_max must be nonnegative");
  if (!(search_max > 0.0)) throw ConfigError("search_max must be positive");

  const auto curve = dispersion_curve(p, linspace(0.0, omega_max, n), search_max);
  CsvWriter csv(out / "dispersion.csv", {"omega", "lambda", "found"});
  for (const auto& s : curve.samples) {
    csv.row_cells({format_double(s.omega), cell(s.growth_rate), s.growth_rate ? "1" : "0"});
  }
  Outcome o{0, constants_json(p), json::object()};
  if (curve.omega_star) {
    log << "omega* = " << format_double(*curve.omega_star) << "\nlambda(omega*) = "
        << format_double(*curve.lambda_star) << '\n'
        << "interior maximum: " << (has_interior_maximum(curve) ? "yes" : "no") << '\n';
    o.results = {{"omega_star", *curve.omega_star}, {"lambda_star", *curve.lambda_star},
                 {"interior_maximum", has_interior_maximum(curve)}};
  } else {
    log << "no growth rate found on the grid\n";
  }
  return o;
}

Outcome cmd_map(const json& params, const fs::path& out, std::ostream& log) {
  const double tmin = param<double>(params, "theta_min", 0.01);
  const double tmax = param<double>(params, "theta_max", 0.99);
  const int tn = param<int>(params, "theta_n", 99);
  const double wmin = param<double>(params, "omega0_min", 0.0);
  const double wmax = param<double>(params, "omega0_max", 4.0);
  const int wn = param<int>(params, "omega0_n", 81);
  if (tn < 1 || wn < 1) throw ConfigError("grid sizes must be at least 1");
  if (!(tmin > 0.0 && tmax < 1.0 && tmin <= tmax)) throw ConfigError("theta range must lie in (0, 1)");
  if (!(wmin >= 0.0 && wmin <= wmax)) throw ConfigError("omega0 range must be nonnegative and ordered");

  const auto map = instability_map(linspace(tmin, tmax, tn), linspace(wmin, wmax, wn));
  CsvWriter csv(out / "map.csv", {"theta", "omega0", "lambda", "unstable"});
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(tn) * wn);
  int unstable = 0;
  for (int i = 0; i < tn; ++i) {
    for (int j = 0; j < wn; ++j) {
      const bool u = map.unstable[i][j];
      unstable += u ? 1 : 0;
      csv.row_cells({format_double(map.theta_grid[i]), format_double(map.omega0_grid[j]),
                     format_double(map.lambda[i][j]), u ? "1" : "0"});
      // theta along x, omega0 upward.
      pixels[static_cast<std::size_t>(wn - 1 - j) * tn + i] = u ? 255 : 0;
    }
  }
  write_pgm(out / "map.pgm", tn, wn, pixels);
  log << "unstable cells: " << unstable << " of " << tn * wn << '\n';
  return {0, nullptr, {{"unstable_cells", unstable}}};
}

Outcome cmd_levelset(const json& params, const fs::path& out, std::ostream& log) {
  const double tmin = param<double>(params, "theta_min", 0.01);
  const double tmax = param<double>(params, "theta_max", 0.99);
  const int tn = param<int>(params, "theta_n", 99);
  const double alpha_max = param<double>(params, "alpha_max", 10.0);
  if (tn < 1) throw ConfigError("theta_n must be at least 1");
  if (!(tmin > 0.0 && tmax < 1.0 && tmin <= tmax)) throw ConfigError("theta range must lie in (0, 1)");
  if (!(alpha_max > 0.0)) throw ConfigError("alpha_max must be positive");

  const auto curve = level_set_alpha_of_theta(linspace(tmin, tmax, tn), alpha_max);
  CsvWriter csv(out / "levelset.csv", {"theta", "alpha"});
  std::optional<double> first;
  for (std::size_t i = 0; i < curve.theta_samples.size(); ++i) {
    csv.row_cells({format_double(curve.theta_samples[i]), cell(curve.alpha_of_theta[i])});
    if (!first && curve.alpha_of_theta[i]) first = curve.theta_samples[i];
  }
  Outcome o{0, nullptr, json::object()};
  if (first) {
    log << "first theta with a level-set point: " << format_double(*first) << '\n';
    o.results = {{"first_theta", *first}};
  } else {
    log << "level set absent on the grid\n";
  }
  return o;
}

Outcome cmd_simulate(const json& params, const fs::path& out, std::ostream& log) {
  SimConfig cfg = parse_sim_config(required<std::string>(params, "config"));
  cfg.output_dir = out.string();
  const auto r = run(cfg);
  const auto& m = r.metrics;
  auto opt = [](const std::optional<double>& x) { return x ? json(*x) : json(nullptr); };
  Outcome o{0, constants_json(cfg.params), json::object()};
  o.results = {{"front_position", m.front_position},
               {"measured_speed", opt(m.measured_speed)},
               {"mode_amplitude", m.mode_amplitude},
               {"measured_growth_rate", opt(m.measured_growth_rate)},
               {"roughness", opt(m.roughness)},
               {"max_roughness", opt(m.max_roughness)},
               {"mass_drift_per_unit_time", r.mass_drift_per_unit_time},
               {"min_value", r.min_value},
               {"max_value", r.max_value},
               {"steps", r.final_state.steps},
               {"warnings", m.warnings}};
  log << "t = " << format_double(r.final_state.t) << " after " << r.final_state.steps << " steps\n"
      << "front_position = " << format_double(m.front_position) << '\n';
  if (m.measured_speed) log << "measured_speed = " << format_double(*m.measured_speed) << '\n';
  if (m.measured_growth_rate) log << "measured_growth_rate = " << format_double(*m.measured_growth_rate) << '\n';
  if (m.roughness) log << "roughness = " << format_double(*m.roughness) << " (max " << format_double(*m.max_roughness) << ")\n";
  log << "mass drift per unit time = " << format_double(r.mass_drift_per_unit_time) << '\n';
  for (const auto& w : m.warnings) log << "warning: " << w << '\n';
  return o;
}

Outcome cmd_validate(const json& params, const fs::path& out, std::ostream& log) {
  const std::string mode = param<std::string>(params, "mode", "quick");
  if (mode != "quick" && mode != "full") throw ConfigError("mode must be quick or full");
  AcceptanceOptions opts;
  opts.full = mode == "full";
  opts.on_result = [&log](const CriterionResult& r) { log << format_result(r) << std::endl; };
  const auto results = run_acceptance(opts);
  CsvWriter csv(out / "validation.csv", {"criterion", "name", "status", "measured"});
  json summary = json::array();
  for (const auto& r : results) {
    std::string measured = r.measured;
    for (char& c : measured) {
      if (c == ',') c = ';';
    }
    csv.row_cells({std::to_string(r.id), r.name, status_label(r.status), measured});
    summary.push_back({{"criterion", r.id}, {"status", status_label(r.status)}});
  }
  return {all_passed(results) ? 0 : 1, nullptr, {{"criteria", summary}}};
}

using Handler = Outcome (*)(const json&, const fs::path&, std::ostream&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"wave", cmd_wave},         {"dispersion", cmd_dispersion}, {"map", cmd_map},
      {"levelset", cmd_levelset}, {"simulate", cmd_simulate},     {"validate", cmd_validate},
  };
  return table;
}

}  // namespace

const char* tool_version() { return FRONTSTAB_VERSION; }

int run_command(const std::string& command, const json& params, const fs::path& out_dir,
                std::ostream& log) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw ConfigError("unknown command '" + command + "'");
  if (!params.is_object()) throw ConfigError("parameters must be a JSON object");
  ensure_directory(out_dir);

  const auto started = std::chrono::steady_clock::now();
  const Outcome o = it->second(params, out_dir, log);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const json manifest = {{"command", command},
                         {"parameters", params},
                         {"tool", "frontstab"},
                         {"version", tool_version()},
                         {"wave_constants", o.constants},
                         {"results", o.results},
                         {"exit_status", o.status},
                         {"wall_seconds", secs}};
  std::ofstream out(out_dir / "run.json");
  if (!out) throw std::runtime_error("cannot write " + (out_dir / "run.json").string());
  out << manifest.dump(2) << '\n';
  return o.status;
}

int replay(const fs::path& manifest, const fs::path& out_dir, std::ostream& log) {
  std::ifstream in(manifest);
  if (!in) throw ConfigError(manifest.string() + ": cannot open");
  json m;
  try {
    in >> m;
  } catch (const json::exception& e) {
    throw ConfigError(manifest.string() + ": not valid JSON (" + e.what() + ")");
  }
  if (!m.is_object() || !m.contains("command") || !m.contains("parameters") ||
      !m.at("command").is_string()) {
    throw ConfigError(manifest.string() + ": missing command or parameters");
  }
  return run_command(m.at("command").get<std::string>(), m.at("parameters"), out_dir, log);
}

}  // namespace frontstab
