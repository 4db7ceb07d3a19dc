#include "frontstab/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "frontstab/errors.hpp"
#include "frontstab/io.hpp"
#include "frontstab/wave.hpp"

namespace frontstab {

namespace {

constexpr double kBoundsTolerance = 1e-8;

int cells_along(double length, double dx) {
  return static_cast<int>(std::lround(length / dx));
}

void config_error(const std::string& what) { throw ConfigError("invalid config: " + what); }

std::string step_name(const char* prefix, long step, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%06ld.%s", prefix, step, ext);
  return buf;
}

void write_snapshot(const SimState& s, const std::filesystem::path& dir) {
  const Grid& g = s.grid;
  std::vector<std::uint8_t> pixels(g.size());
  // Top row of the image is the largest y.
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      pixels[static_cast<std::size_t>(g.ny - 1 - j) * g.nx + i] = to_gray(s.u[g.index(i, j)]);
    }
  }
  write_pgm(dir / step_name("u", s.steps, "pgm"), g.nx, g.ny, pixels);

  if (g.dimension() == 1) {
    CsvWriter csv(dir / step_name("fields", s.steps, "csv"), {"x", "u", "v"});
    for (int i = 0; i < g.nx; ++i) csv.row({g.x(i), s.u[i], s.v[i]});
  } else {
    CsvWriter csv(dir / step_name("fields", s.steps, "csv"), {"x", "y", "u", "v"});
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const auto k = g.index(i, j);
        csv.row({g.x(i), g.y(j), s.u[k], s.v[k]});
      }
    }
  }
}

}  // namespace

void validate(const SimConfig& c) {
  try {
    validate(c.params);
  } catch (const DomainError& e) {
    config_error(e.what());
  }
  if (!(c.dt > 0.0)) config_error("dt must be positive");
  if (!(c.dx > 0.0)) config_error("dx must be positive");
  if (!(c.t_end > 0.0)) config_error("t_end must be positive");
  if (c.dimension != 1 && c.dimension != 2) config_error("dimension must be 1 or 2");
  if (!(c.lx > 0.0) || cells_along(c.lx, c.dx) < 2) config_error("lx must span at least 2 cells");
  if (c.ny < 0) config_error("ny must be nonnegative");
  if (c.dimension == 2 && (!(c.ly > 0.0) || (c.ny == 0 ? cells_along(c.ly, c.dx) : c.ny) < 2)) {
    config_error("ly must span at least 2 cells in 2D");
  }
  if (!std::isfinite(c.x_origin) || !std::isfinite(c.y_origin)) config_error("origin not finite");
  if (c.snapshot_every < 0) config_error("snapshot_every must be nonnegative");
  if (c.init == InitKind::disc) {
    if (c.dimension != 2) config_error("disc init requires dimension = 2");
    if (!(c.disc_radius > 0.0) || !(c.disc_radius < 0.5 * std::min(c.lx, c.ly))) {
      config_error("disc radius must be in (0, min(lx, ly)/2)");
    }
  } else {
    if (!(c.perturb_eps >= 0.0)) config_error("perturb_eps must be nonnegative");
    if (!(c.perturb_omega >= 0.0)) config_error("perturb_omega must be nonnegative");
    if (c.dimension == 2 && c.perturb_omega > 0.0) {
      // Neumann in y admits cos(omega y) only for omega = k pi / ly.
      const double k = c.perturb_omega * c.ly / std::numbers::pi;
      if (std::fabs(k - std::round(k)) > 1e-9 * std::max(1.0, k)) {
        config_error("perturb_omega * ly / pi must be an integer");
      }
    }
  }
}

Grid make_grid(const SimConfig& c) {
  Grid g;
  g.nx = cells_along(c.lx, c.dx);
  g.dx = c.lx / g.nx;
  g.x0 = c.x_origin;
  if (c.dimension == 2) {
    g.ny = c.ny > 0 ? c.ny : cells_along(c.ly, c.dx);
    g.dy = c.ly / g.ny;
    g.y0 = c.y_origin;
  } else {
    g.ny = 1;
    g.dy = 1.0;
  }
  return g;
}

double total_mass(const SimState& s) {
  double sum = 0.0;
  for (std::size_t k = 0; k < s.u.size(); ++k) sum += s.u[k] + s.v[k];
  return sum * s.grid.cell_area();
}

SimState initial_state(const SimConfig& cfg) {
  validate(cfg);
  SimState s;
  s.grid = make_grid(cfg);
  const Grid& g = s.grid;
  s.u.resize(g.size());
  s.v.resize(g.size());

  if (cfg.init == InitKind::disc) {
    const double r2 = cfg.disc_radius * cfg.disc_radius;
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double dx = g.x(i) - cfg.disc_center_x;
        const double dy = g.y(j) - cfg.disc_center_y;
        const double inside = dx * dx + dy * dy <= r2 ? 1.0 : 0.0;
        s.u[g.index(i, j)] = inside;
        s.v[g.index(i, j)] = 1.0 - inside;
      }
    }
    return s;
  }

  const double xc = cfg.x_origin + 0.25 * cfg.lx;
  for (int i = 0; i < g.nx; ++i) {
    const double xi = g.x(i) - xc;
    const auto prof = eval_profile(cfg.params, xi);
    const auto [du, dv] = eval_profile_derivative(cfg.params, xi);
    for (int j = 0; j < g.ny; ++j) {
      const double shift =
          g.dimension() == 2 ? cfg.perturb_eps * std::cos(cfg.perturb_omega * g.y(j)) : 0.0;
      s.u[g.index(i, j)] = prof.u0 + shift * du;
      s.v[g.index(i, j)] = prof.v0 + shift * dv;
    }
  }
  return s;
}

Simulator::Simulator(const SimConfig& cfg)
    : cfg_((validate(cfg), cfg)),
      grid_(make_grid(cfg)),
      solve_u_(grid_, cfg.dt * cfg.params.alpha),
      solve_v_(grid_, cfg.dt),
      rhs_u_(grid_.size()),
      rhs_v_(grid_.size()) {
  if (cfg.dt / cfg.params.alpha > 1.0) {
    std::ostringstream msg;
    msg << "dt/alpha = " << cfg.dt / cfg.params.alpha
        << " > 1: explicit reaction step may lose positivity";
    warnings_.push_back(msg.str());
  }
}

void Simulator::step(SimState& s) {
  if (s.u.size() != grid_.size() || s.v.size() != grid_.size()) {
    throw DomainError("Simulator::step: state does not match the configured grid");
  }
  const double theta = cfg_.params.theta;
  const double rate = cfg_.dt / cfg_.params.alpha;
  for (std::size_t k = 0; k < s.u.size(); ++k) {
    const double r = ignition(s.u[k], theta) * s.v[k] * rate;
    rhs_u_[k] = s.u[k] + r;
    rhs_v_[k] = s.v[k] - r;
  }
  solve_u_.solve(rhs_u_, s.u);
  solve_v_.solve(rhs_v_, s.v);
  ++s.steps;
  s.t = static_cast<double>(s.steps) * cfg_.dt;
}

SimState step(const SimState& s, const SimConfig& cfg) {
  Simulator sim(cfg);
  SimState next = s;
  sim.step(next);
  return next;
}

RunResult run(const SimConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  Simulator sim(cfg);
  RunResult res;
  res.final_state = initial_state(cfg);
  SimState& s = res.final_state;
  const Grid& g = s.grid;
  const double theta = cfg.params.theta;
  const bool strip = g.dimension() == 2 && cfg.init == InitKind::planar_wave;
  const bool disc = cfg.init == InitKind::disc;

  const bool write = !cfg.output_dir.empty();
  const std::filesystem::path dir(cfg.output_dir);
  if (write) ensure_directory(dir);

  res.mass_initial = total_mass(s);
  res.min_value = std::min(*std::min_element(s.u.begin(), s.u.end()),
                           *std::min_element(s.v.begin(), s.v.end()));
  res.max_value = std::max(*std::max_element(s.u.begin(), s.u.end()),
                           *std::max_element(s.v.begin(), s.v.end()));

  auto sample = [&]() {
    MetricSample m;
    m.t = s.t;
    if (disc) {
      m.front_position = std::sqrt(burnt_area(g, s.u, theta) / std::numbers::pi);
      m.roughness = roughness(g, s.u, theta);
    } else if (strip) {
      const auto line = front_line(g, s.u, theta);
      double mean = 0.0;
      for (double x : line) mean += x;
      m.front_position = mean / static_cast<double>(line.size());
      m.mode_amplitude = cfg.perturb_omega > 0.0 ? mode_amplitude(g, line, cfg.perturb_omega) : 0.0;
    } else {
      m.front_position = front_position_1d(g, s.u, theta);
    }
    res.trace.push_back(m);
  };

  auto observe = [&]() {
    const double m = total_mass(s);
    res.max_relative_mass_drift =
        std::max(res.max_relative_mass_drift, std::fabs(m - res.mass_initial) / res.mass_initial);
    for (std::size_t k = 0; k < s.u.size(); ++k) {
      res.min_value = std::min({res.min_value, s.u[k], s.v[k]});
      res.max_value = std::max({res.max_value, s.u[k], s.v[k]});
    }
    sample();
    if (write && cfg.snapshot_every > 0 && s.steps % cfg.snapshot_every == 0) {
      write_snapshot(s, dir);
    }
  };

  const long n_steps = std::max(1L, std::lround(cfg.t_end / cfg.dt));
  observe();
  for (long n = 0; n < n_steps; ++n) {
    sim.step(s);
    observe();
  }

  res.mass_drift_per_unit_time = res.max_relative_mass_drift / s.t;
  res.bounds_ok = res.min_value >= -kBoundsTolerance && res.max_value <= 1.0 + kBoundsTolerance;

  FrontMetrics& fm = res.metrics;
  fm.warnings = sim.warnings();
  if (!res.bounds_ok) {
    std::ostringstream msg;
    msg << "fields left [0, 1]: min " << res.min_value << ", max " << res.max_value;
    fm.warnings.push_back(msg.str());
  }
  const auto& last = res.trace.back();
  fm.front_position = last.front_position;
  fm.mode_amplitude = last.mode_amplitude;
  if (disc) {
    fm.roughness = last.roughness;
    double mx = 0.0;
    for (const auto& m : res.trace) mx = std::max(mx, m.roughness);
    fm.max_roughness = mx;
  }

  const double window = 0.5 * cfg.t_end;
  std::vector<TracePoint> positions;
  std::vector<TracePoint> amplitudes;
  for (const auto& m : res.trace) {
    positions.push_back({m.t, m.front_position});
    amplitudes.push_back({m.t, m.mode_amplitude});
  }
  try {
    fm.measured_speed = measure_speed(positions, window);
  } catch (const DomainError& e) {
    fm.warnings.push_back(std::string("speed not measured: ") + e.what());
  }
  if (strip && cfg.perturb_eps > 0.0 && cfg.perturb_omega > 0.0) {
    try {
      auto gm = measure_growth_rate(amplitudes, window, 0.1 * front_width(cfg.params));
      fm.measured_growth_rate = gm.rate;
      fm.warnings.insert(fm.warnings.end(), gm.warnings.begin(), gm.warnings.end());
    } catch (const AmplitudeUnderflow& e) {
      fm.warnings.push_back(std::string("growth rate not measured: ") + e.what());
    } catch (const DomainError& e) {
      fm.warnings.push_back(std::string("growth rate not measured: ") + e.what());
    }
  }

  if (write) {
    CsvWriter metrics(dir / "metrics.csv", {"t", "front_position", "mode_amplitude"});
    for (const auto& m : res.trace) metrics.row({m.t, m.front_position, m.mode_amplitude});
    if (disc) {
      CsvWriter rough(dir / "roughness.csv", {"t", "equivalent_radius", "roughness"});
      for (const auto& m : res.trace) rough.row({m.t, m.front_position, m.roughness});
    }
  }

  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return res;
}

}  // namespace frontstab
