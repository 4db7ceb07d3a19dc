#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "frontstab/errors.hpp"
#include "frontstab/simulator.hpp"
#include "frontstab/wave.hpp"
#include "test_support.hpp"

namespace frontstab {
namespace {

using testing::uniform;

SimConfig planar_1d(double alpha, double theta) {
  SimConfig c;
  c.params = {alpha, theta};
  c.dimension = 1;
  c.dx = 0.01;
  c.dt = 0.0025;
  c.lx = 40.0;
  c.t_end = 1.0;
  return c;
}

SimConfig small_disc(double alpha) {
  SimConfig c;
  c.params = {alpha, 0.1};
  c.dimension = 2;
  c.init = InitKind::disc;
  c.lx = c.ly = 2.0;
  c.x_origin = c.y_origin = -1.0;
  c.dx = 1.0 / 32.0;
  c.t_end = 0.1;
  return c;
}

TEST(SimConfig, Validation) {
  SimConfig c = planar_1d(0.25, 0.5);
  EXPECT_NO_THROW(validate(c));
  auto bad = [](SimConfig c) { EXPECT_THROW(validate(c), ConfigError); };
  SimConfig b = c;
  b.dt = 0.0;
  bad(b);
  b = c;
  b.dx = -1.0;
  bad(b);
  b = c;
  b.t_end = 0.0;
  bad(b);
  b = c;
  b.params.theta = 1.0;
  bad(b);
  b = c;
  b.perturb_eps = -1e-3;
  bad(b);
  b = c;
  b.dimension = 3;
  bad(b);
  b = small_disc(0.25);
  b.disc_radius = 1.0;
  bad(b);
  b = small_disc(0.25);
  b.dimension = 1;
  bad(b);
  b = c;
  b.dimension = 2;
  b.ly = 1.0;
  b.perturb_omega = 1.5 * std::numbers::pi;  // not k*pi/ly
  bad(b);
  b.perturb_omega = 2.0 * std::numbers::pi;
  EXPECT_NO_THROW(validate(b));
}

TEST(SimConfig, GridFromConfig) {
  SimConfig c = small_disc(0.25);
  Grid g = make_grid(c);
  EXPECT_EQ(g.nx, 64);
  EXPECT_EQ(g.ny, 64);
  EXPECT_DOUBLE_EQ(g.x(0), -1.0 + 0.5 / 32.0);
  c.ny = 8;
  g = make_grid(c);
  EXPECT_EQ(g.ny, 8);
  EXPECT_DOUBLE_EQ(g.dy, 0.25);
  EXPECT_EQ(make_grid(planar_1d(0.25, 0.5)).ny, 1);
}

TEST(InitialState, PlanarWaveMatchesProfile) {
  SimConfig c = planar_1d(0.25, 0.5);
  const SimState s = initial_state(c);
  for (int i = 0; i < s.grid.nx; i += 97) {
    const auto p = eval_profile(c.params, s.grid.x(i) - 10.0);
    EXPECT_EQ(s.u[i], p.u0);
    EXPECT_EQ(s.v[i], p.v0);
  }
  EXPECT_NEAR(front_position_1d(s.grid, s.u, 0.5), 10.0, 1e-3);
}

TEST(InitialState, PerturbationIsNeutralModeShape) {
  SimConfig c = planar_1d(0.25, 0.5);
  c.dimension = 2;
  c.ly = 1.0;
  c.ny = 8;
  c.perturb_eps = 1e-3;
  c.perturb_omega = std::numbers::pi;
  const SimState s = initial_state(c);
  const Grid& g = s.grid;
  for (int j = 0; j < g.ny; ++j) {
    const double shift = 1e-3 * std::cos(std::numbers::pi * g.y(j));
    for (int i = 0; i < g.nx; i += 131) {
      const double x = g.x(i) - 10.0;
      const auto [du, dv] = eval_profile_derivative(c.params, x);
      EXPECT_EQ(s.u[g.index(i, j)], eval_profile(c.params, x).u0 + shift * du);
      EXPECT_EQ(s.v[g.index(i, j)], eval_profile(c.params, x).v0 + shift * dv);
    }
  }
  // Front moves by about -shift: u0(x + shift) ~ u0 + shift u0'.
  const auto line = front_line(g, s.u, 0.5);
  EXPECT_NEAR(mode_amplitude(g, line, std::numbers::pi), 1e-3, 2e-5);
}

TEST(InitialState, DiscIndicator) {
  const SimConfig c = small_disc(0.25);
  const SimState s = initial_state(c);
  for (int j = 0; j < s.grid.ny; ++j)
    for (int i = 0; i < s.grid.nx; ++i) {
      const auto k = s.grid.index(i, j);
      const bool inside = std::hypot(s.grid.x(i), s.grid.y(j)) <= 0.4;
      EXPECT_EQ(s.u[k], inside ? 1.0 : 0.0);
      EXPECT_EQ(s.v[k], 1.0 - s.u[k]);
    }
}

TEST(Step, EquilibriaAreFixedPoints) {
  for (int dim : {1, 2}) {
    SimConfig c = dim == 1 ? planar_1d(0.25, 0.3) : small_disc(0.25);
    Simulator sim(c);
    for (double u_const : {0.0, 1.0}) {
      SimState s = initial_state(c);
      std::fill(s.u.begin(), s.u.end(), u_const);
      std::fill(s.v.begin(), s.v.end(), 1.0 - u_const);
      for (int n = 0; n < 5; ++n) sim.step(s);
      for (std::size_t k = 0; k < s.u.size(); ++k) {
        EXPECT_NEAR(s.u[k], u_const, 1e-14);
        EXPECT_NEAR(s.v[k], 1.0 - u_const, 1e-14);
      }
    }
  }
}

TEST(Step, ConservesTotalMassOfRandomStates) {
  for (int dim : {1, 2}) {
    SimConfig c = dim == 1 ? planar_1d(0.05, 0.3) : small_disc(0.05);
    Simulator sim(c);
    SimState s = initial_state(c);
    for (std::size_t k = 0; k < s.u.size(); ++k) {
      s.u[k] = uniform(0.0, 1.0);
      s.v[k] = uniform(0.0, 1.0);
    }
    for (int n = 0; n < 10; ++n) {
      const double before = total_mass(s);
      sim.step(s);
      EXPECT_LT(std::fabs(total_mass(s) - before) / before, 1e-9);
    }
  }
}

TEST(Step, StatelessFormMatchesSimulator) {
  const SimConfig c = small_disc(0.1);
  const SimState s0 = initial_state(c);
  Simulator sim(c);
  SimState a = s0;
  sim.step(a);
  const SimState b = step(s0, c);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.v, b.v);
  EXPECT_EQ(b.steps, 1);
  EXPECT_DOUBLE_EQ(b.t, c.dt);
}

TEST(Step, RejectsMismatchedState) {
  const SimConfig c = planar_1d(0.25, 0.5);
  Simulator sim(c);
  SimState s = initial_state(c);
  s.u.pop_back();
  EXPECT_THROW(sim.step(s), DomainError);
}

TEST(Step, WarnsWhenReactionStepIsLarge) {
  SimConfig c = planar_1d(0.001, 0.5);
  EXPECT_FALSE(Simulator(c).warnings().empty());
  c.params.alpha = 0.25;
  EXPECT_TRUE(Simulator(c).warnings().empty());
}

TEST(Run, MonotoneProfileStaysMonotoneAndPositive) {
  SimConfig c = planar_1d(0.25, 0.5);
  c.t_end = 0.5;
  Simulator sim(c);
  SimState s = initial_state(c);
  for (int n = 0; n < 200; ++n) {
    sim.step(s);
    for (int i = 0; i + 1 < s.grid.nx; ++i) ASSERT_LE(s.u[i + 1], s.u[i] + 1e-8);
    for (std::size_t k = 0; k < s.u.size(); ++k) {
      ASSERT_GE(s.u[k], -1e-8);
      ASSERT_GE(s.v[k], -1e-8);
    }
  }
}

TEST(Run, OneDimensionalSpeedMatchesWaveSpeed) {
  SimConfig c = planar_1d(0.25, 0.5);
  c.t_end = 4.0;
  const RunResult r = run(c);
  ASSERT_TRUE(r.metrics.measured_speed);
  const double sigma = wave_constants(c.params).sigma;
  EXPECT_NEAR(*r.metrics.measured_speed / sigma, 1.0, 0.05);
  EXPECT_LT(r.mass_drift_per_unit_time, 1e-8);
  EXPECT_FALSE(r.metrics.measured_growth_rate);
  EXPECT_FALSE(r.metrics.roughness);
  EXPECT_EQ(r.trace.size(), 1601u);
  EXPECT_GE(r.min_value, -1e-8);
}

TEST(Run, OvershootAboveOneShrinksUnderRefinement) {
  double previous = 0.0;
  for (double dx : {0.02, 0.01}) {
    SimConfig c = planar_1d(0.25, 0.5);
    c.dx = dx;
    c.dt = 0.25 * dx;
    c.t_end = 10.0;
    const RunResult r = run(c);
    const double over = r.max_value - 1.0;
    EXPECT_GT(over, 0.0);
    EXPECT_FALSE(r.bounds_ok);
    if (previous > 0.0) EXPECT_LT(over / previous, 0.5);
    previous = over;
  }
}

TEST(Run, UnperturbedStripHasNoGrowthReport) {
  SimConfig c = planar_1d(0.25, 0.5);
  c.dimension = 2;
  c.lx = 10.0;
  c.ly = 1.0;
  c.dx = 0.02;
  c.ny = 4;
  c.t_end = 0.5;
  c.perturb_omega = std::numbers::pi;
  const RunResult r = run(c);
  EXPECT_FALSE(r.metrics.measured_growth_rate);
  EXPECT_LT(r.metrics.mode_amplitude, 1e-10);
  EXPECT_TRUE(r.metrics.measured_speed);
}

TEST(Run, DiscExpandsAndStaysRound) {
  SimConfig c = small_disc(0.25);
  c.t_end = 0.2;
  const RunResult r = run(c);
  ASSERT_TRUE(r.metrics.roughness);
  EXPECT_GT(r.metrics.front_position, 0.45);
  EXPECT_LT(*r.metrics.roughness, 1.1);
  EXPECT_GE(*r.metrics.max_roughness, *r.metrics.roughness);
  EXPECT_LT(r.mass_drift_per_unit_time, 1e-8);
}

TEST(Run, WritesInterfaceFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "frontstab_sim_test";
  std::filesystem::remove_all(dir);
  SimConfig c = small_disc(0.25);
  c.t_end = 0.01;
  c.snapshot_every = 2;
  c.output_dir = dir.string();
  run(c);
  for (const char* f : {"u_000000.pgm", "u_000004.pgm", "fields_000002.csv", "metrics.csv",
                        "roughness.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  EXPECT_FALSE(std::filesystem::exists(dir / "u_000001.pgm"));

  std::ifstream pgm(dir / "u_000000.pgm", std::ios::binary);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  pgm >> magic >> w >> h >> maxval;
  EXPECT_EQ(magic, "P5");
  EXPECT_EQ(w, 64);
  EXPECT_EQ(h, 64);
  EXPECT_EQ(maxval, 255);
  EXPECT_EQ(std::filesystem::file_size(dir / "u_000000.pgm"), 13u + 64u * 64u);

  std::ifstream metrics(dir / "metrics.csv");
  std::string header;
  std::getline(metrics, header);
  EXPECT_EQ(header, "t,front_position,mode_amplitude");
  std::ifstream fields(dir / "fields_000002.csv");
  std::getline(fields, header);
  EXPECT_EQ(header, "x,y,u,v");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace frontstab
