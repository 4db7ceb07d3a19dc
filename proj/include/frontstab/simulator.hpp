#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontstab/front_metrics.hpp"
#include "frontstab/grid.hpp"
#include "frontstab/model.hpp"
#include "frontstab/neumann_solver.hpp"

namespace frontstab {

enum class InitKind { disc, planar_wave };

struct SimConfig {
  ModelParams params;
  double dt = 0.0025;
  double dx = 0.01;
  int dimension = 1;  // 1: interval [0, lx]; 2: rectangle
  double lx = 40.0;
  double ly = 0.0;
  // Cells across ly in 2D; 0 means ly/dx rounded (square cells).
  int ny = 0;
  // Lower-left corner of the domain.
  double x_origin = 0.0;
  double y_origin = 0.0;
  double t_end = 1.0;
  InitKind init = InitKind::planar_wave;
  // disc
  double disc_radius = 0.4;
  double disc_center_x = 0.0;
  double disc_center_y = 0.0;
  // planar_wave; the front starts at x_origin + lx/4
  double perturb_eps = 0.0;
  double perturb_omega = 0.0;
  // Snapshot cadence in steps; 0 disables snapshots.
  int snapshot_every = 0;
  // Empty disables all file output.
  std::string output_dir;
};

/// Throws ConfigError on any violated invariant.
void validate(const SimConfig& cfg);

/// Grid implied by the config: nx = round(lx/dx); in 2D ny as configured or
/// round(ly/dx).
Grid make_grid(const SimConfig& cfg);

struct SimState {
  Grid grid;
  std::vector<double> u;
  std::vector<double> v;
  double t = 0.0;
  long steps = 0;
};

/// Sum of (u + v) times the cell measure.
double total_mass(const SimState& s);

/// Initial data per cfg.init.
SimState initial_state(const SimConfig& cfg);

/// Stepper owning the two factorized diffusion operators.
class Simulator {
 public:
  explicit Simulator(const SimConfig& cfg);

  /// One semi-implicit step: explicit reaction at level n, backward-Euler
  /// diffusion. Throws SolverFailure if a solve misses the residual target.
  void step(SimState& s);

  const SimConfig& config() const { return cfg_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  SimConfig cfg_;
  Grid grid_;
  NeumannHelmholtzSolver solve_u_;
  NeumannHelmholtzSolver solve_v_;
  std::vector<double> rhs_u_;
  std::vector<double> rhs_v_;
  std::vector<std::string> warnings_;
};

/// Stateless convenience form; builds a Simulator per call.
SimState step(const SimState& s, const SimConfig& cfg);

struct FrontMetrics {
  double front_position = 0.0;  // 1D / strip: mean crossing; disc: equal-area radius
  std::optional<double> measured_speed;
  double mode_amplitude = 0.0;
  std::optional<double> measured_growth_rate;
  std::optional<double> roughness;      // disc only, at the final time
  std::optional<double> max_roughness;  // disc only, over the run
  std::vector<std::string> warnings;
};

struct MetricSample {
  double t = 0.0;
  double front_position = 0.0;
  double mode_amplitude = 0.0;
  double roughness = 0.0;
};

struct RunResult {
  SimState final_state;
  FrontMetrics metrics;
  std::vector<MetricSample> trace;
  double mass_initial = 0.0;
  double max_relative_mass_drift = 0.0;  // max_n |M_n - M_0| / M_0
  double mass_drift_per_unit_time = 0.0;
  double min_value = 0.0;  // over u and v, all steps
  double max_value = 0.0;
  bool bounds_ok = true;   // 0 <= u, v <= 1 + 1e-8 throughout (within -1e-8)
  double wall_seconds = 0.0;
};

/// Steps from initial_state(cfg) to t_end, tracking metrics each step and
/// writing snapshots and metrics files if cfg.output_dir is set.
RunResult run(const SimConfig& cfg);

}  // namespace frontstab
