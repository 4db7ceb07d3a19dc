#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "frontstab/config.hpp"
#include "frontstab/errors.hpp"

namespace frontstab {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_sim_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

TEST(Config, ParsesKeysCommentsAndWhitespace) {
  const auto c = parse_sim_config(
      "# header\n"
      "alpha = 0.25   # trailing comment\n"
      "\n"
      "  theta=0.1\n"
      "t_end = 2\n"
      "init = disc\n"
      "dimension = 2\n"
      "lx = 8\nly = 8\nx_origin = -4\ny_origin = -4\n"
      "dx = 0.015625\n"
      "disc_radius = 0.4\n"
      "snapshot_every = 100\n"
      "output_dir = out/run one\n");
  EXPECT_EQ(c.params.alpha, 0.25);
  EXPECT_EQ(c.params.theta, 0.1);
  EXPECT_EQ(c.t_end, 2.0);
  EXPECT_EQ(c.init, InitKind::disc);
  EXPECT_EQ(c.dimension, 2);
  EXPECT_EQ(c.x_origin, -4.0);
  EXPECT_EQ(c.snapshot_every, 100);
  EXPECT_EQ(c.output_dir, "out/run one");
  EXPECT_EQ(c.dt, 0.0025);  // default
}

TEST(Config, ErrorsNameTheLine) {
  EXPECT_NE(error_of("alpha = 0.25\ntheta = 0.5\nt_end = 1\nspeed = 3\n").find("line 4: unknown key 'speed'"),
            std::string::npos);
  EXPECT_NE(error_of("alpha = 0.25\nalpha = 0.3\n").find("line 2: duplicate key 'alpha'"), std::string::npos);
  EXPECT_NE(error_of("alpha = abc\n").find("line 1: bad value 'abc' for alpha"), std::string::npos);
  EXPECT_NE(error_of("alpha = 0.25\n\ntheta 0.5\n").find("line 3: expected key = value"), std::string::npos);
  EXPECT_NE(error_of("init = ring\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("dimension = 1.5\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("alpha = 0.25\ntheta = 0.5\n").find("missing required key 't_end'"), std::string::npos);
}

TEST(Config, ValidatesTheResult) {
  EXPECT_THROW(parse_sim_config("alpha = 0.25\ntheta = 0.5\nt_end = -1\n"), ConfigError);
  EXPECT_THROW(parse_sim_config("alpha = 0\ntheta = 0.5\nt_end = 1\n"), ConfigError);
}

TEST(Config, FormatRoundTripsExactly) {
  SimConfig c;
  c.params = {0.1 + 0.2, 1.0 / 3.0};
  c.dt = 1e-3 / 7.0;
  c.dx = 0.001;
  c.dimension = 2;
  c.lx = 4.0;
  c.ly = 3.141592653589793 / 8.5;
  c.ny = 32;
  c.t_end = 1.2;
  c.perturb_eps = 5e-4;
  c.perturb_omega = 8.5;
  c.snapshot_every = 7;
  c.output_dir = "x/y";
  const SimConfig d = parse_sim_config(format_sim_config(c));
  EXPECT_EQ(format_sim_config(d), format_sim_config(c));
  EXPECT_EQ(d.params.alpha, c.params.alpha);
  EXPECT_EQ(d.params.theta, c.params.theta);
  EXPECT_EQ(d.dt, c.dt);
  EXPECT_EQ(d.ly, c.ly);
  EXPECT_EQ(d.ny, c.ny);
  EXPECT_EQ(d.output_dir, c.output_dir);
}

TEST(Config, BundledConfigsLoad) {
  const std::filesystem::path dir = FRONTSTAB_SOURCE_DIR "/configs";
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".cfg") continue;
    EXPECT_NO_THROW(load_sim_config(entry.path())) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 8);
  const auto c = load_sim_config(dir / "fig2_left.cfg");
  EXPECT_EQ(c.params.alpha, 0.01);
  EXPECT_EQ(c.params.theta, 0.1);
  EXPECT_EQ(c.init, InitKind::disc);
  EXPECT_EQ(make_grid(c).nx, 512);
}

TEST(Config, MissingFileIsConfigError) {
  EXPECT_THROW(load_sim_config("/nonexistent/frontstab.cfg"), ConfigError);
}

}  // namespace
}  // namespace frontstab
