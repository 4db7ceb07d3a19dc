#include "frontstab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "frontstab/dispersion.hpp"
#include "frontstab/simulator.hpp"
#include "frontstab/sweeps.hpp"
#include "frontstab/wave.hpp"

namespace frontstab {

namespace {

// Pinned tolerances.
constexpr double kIdentityRelTol = 1e-13;
constexpr double kDispersionZeroTol = 1e-12;
constexpr double kResidualBound = 1e-4;
constexpr double kResidualStep = 1e-3;
constexpr double kOrderRatioLo = 3.5;
constexpr double kOrderRatioHi = 4.5;
constexpr double kCase1RelTol = 0.02;
constexpr double kCase1Alpha = 1e-4;
constexpr double kSpeedRelTol = 0.05;
constexpr double kRefinedSpeedRelTol = 0.02;
constexpr double kGrowthRelTol = 0.20;
constexpr double kRoughStable = 1.1;
constexpr double kRoughFingered = 1.3;
constexpr double kMassDriftPerTime = 1e-8;
constexpr double kSearchMax = 10.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double rel(double value, double expected) { return std::fabs(value - expected) / std::fabs(expected); }

struct Recorder {
  const AcceptanceOptions& opts;
  std::vector<CriterionResult> results;

  void add(CriterionResult r) {
    if (opts.on_result) opts.on_result(r);
    results.push_back(std::move(r));
  }
};

CriterionResult identity_suite() {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(20240611u);
  std::uniform_real_distribution<double> ua(0.01, 2.0), ut(0.05, 0.95);
  double worst_sigma = 0.0, worst_decay = 0.0, worst_jump = 0.0, worst_g = 0.0;
  bool b_ok = true;
  for (int k = 0; k < 100; ++k) {
    const ModelParams p{ua(gen), ut(gen)};
    const auto w = wave_constants(p);
    worst_sigma = std::max(worst_sigma, rel(w.sigma * w.beta, p.alpha * (1.0 - p.theta)));
    worst_decay = std::max(worst_decay, rel(w.lambda_decay * w.beta, p.theta));
    b_ok = b_ok && w.b > 0.0 && w.b < 1.0;
    // Relative to the slope magnitude theta (1 - theta) / beta.
    worst_jump = std::max(worst_jump, derivative_jump_check(p) * w.beta / (p.theta * (1.0 - p.theta)));
    worst_g = std::max(worst_g, std::fabs(dispersion_residual({p, 0.0, 0.0})));
  }
  CriterionResult r{1, "identity suite", CriterionStatus::fail, {}, seconds_since(t0)};
  r.status = worst_sigma <= kIdentityRelTol && worst_decay <= kIdentityRelTol && b_ok &&
                     worst_jump <= kIdentityRelTol && worst_g <= kDispersionZeroTol && r.seconds < 1.0
                 ? CriterionStatus::pass
                 : CriterionStatus::fail;
  r.measured = "max rel err sigma*beta " + fmt("%.2e", worst_sigma) + ", decay*beta " +
               fmt("%.2e", worst_decay) + ", jump " + fmt("%.2e", worst_jump) + "; b in (0,1) " +
               (b_ok ? "yes" : "no") + "; max |G(0,0)| " + fmt("%.2e", worst_g) + "; " +
               fmt("%.3f s", r.seconds);
  return r;
}

CriterionResult profile_residuals() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream m;
  for (const ModelParams p : {ModelParams{0.25, 0.5}, ModelParams{0.005, 0.1}, ModelParams{1.0, 0.3}}) {
    const auto a = profile_residual(p, kResidualStep);
    const auto b = profile_residual(p, 0.5 * kResidualStep);
    const double ra = std::max(a.max_residual_u, a.max_residual_v);
    const double rb = std::max(b.max_residual_u, b.max_residual_v);
    const double ratio = ra / rb;
    ok = ok && ra < kResidualBound && ratio >= kOrderRatioLo && ratio <= kOrderRatioHi;
    m << "(" << p.alpha << "," << p.theta << "): res " << fmt("%.3e", ra) << " ratio "
      << fmt("%.3f", ratio) << "; ";
  }
  return {2, "profile residual", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(),
          seconds_since(t0)};
}

CriterionResult case1_limit() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream m;
  for (double theta : {0.25, 0.5, 0.75}) {
    const double expected = -(1.0 - theta) / (2.0 * theta);
    const auto got = solve_growth_rate({kCase1Alpha, theta}, 0.0, kSearchMax);
    m << "theta " << theta << ": expected " << fmt("%.4f", expected) << " got ";
    if (got) {
      m << fmt("%.6g", *got) << " (err " << fmt("%.2e", rel(*got, expected)) << "); ";
      ok = ok && rel(*got, expected) < kCase1RelTol;
    } else {
      m << "no root above floor " << fmt("%.3e", lambda_floor({kCase1Alpha, theta}, 0.0)) << "; ";
      ok = false;
    }
  }
  return {3, "Case-1 limit", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(),
          seconds_since(t0)};
}

CriterionResult case2_convergence() {
  const auto t0 = Clock::now();
  bool ok = true;
  int monotone = 0, total = 0;
  std::ostringstream m;
  for (double theta : {0.1, 0.4, 0.9}) {
    for (double w0 : {0.5, 1.0, 2.0}) {
      const double limit = case2_lambda(theta, w0);
      double prev = INFINITY;
      bool mono = true;
      std::ostringstream row;
      for (double alpha : {1e-2, 1e-3, 1e-4}) {
        const auto lam = solve_growth_rate({alpha, theta}, w0 / std::sqrt(alpha), kSearchMax);
        if (!lam) {
          mono = false;
          row << " absent";
          continue;
        }
        const double err = std::fabs(*lam - limit);
        row << " " << fmt("%.2e", err);
        mono = mono && err < prev;
        prev = err;
      }
      ++total;
      if (mono) ++monotone;
      ok = ok && mono;
      if (!mono) m << "non-monotone at (" << theta << "," << w0 << "):" << row.str() << "; ";
    }
  }
  m << monotone << "/" << total << " monotone";
  return {4, "Case-2 convergence", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(),
          seconds_since(t0)};
}

CriterionResult instability_region() {
  const auto t0 = Clock::now();
  const double a = case2_lambda(0.1, 1.0);
  const double b = case2_lambda(0.9, 1.0);
  const auto map = instability_map(linspace(0.02, 0.98, 49), linspace(0.0, 4.0, 81));
  int low = 0, high = 0;
  for (std::size_t i = 0; i < map.theta_grid.size(); ++i) {
    for (bool u : map.unstable[i]) (map.theta_grid[i] < 0.5 ? low : high) += u ? 1 : 0;
  }
  const bool ok = a > 0.0 && b < 0.0 && low + high > 0 && low > high;
  std::ostringstream m;
  m << "case2(0.1,1) " << fmt("%.6f", a) << ", case2(0.9,1) " << fmt("%.6f", b)
    << "; unstable cells theta<0.5: " << low << ", theta>=0.5: " << high;
  return {5, "instability region", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(),
          seconds_since(t0)};
}

CriterionResult theta_star_bracket() {
  const auto t0 = Clock::now();
  constexpr double kAlphaSearchMax = 10.0;
  std::vector<double> thetas;
  for (int k = 1; k <= 99; ++k) thetas.push_back(0.01 * k);
  const auto curve = level_set_alpha_of_theta(thetas, kAlphaSearchMax);
  std::optional<double> first_theta, first_alpha;
  bool all_above_one = true;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!curve.alpha_of_theta[i]) continue;
    if (!first_theta) {
      first_theta = thetas[i];
      first_alpha = curve.alpha_of_theta[i];
    }
    all_above_one = all_above_one && *curve.alpha_of_theta[i] > 1.0;
  }
  const double secs = seconds_since(t0);
  const bool ok = first_theta && *first_theta > 0.7 && *first_theta < 0.8 && all_above_one && secs < 60.0;
  std::ostringstream m;
  m << "alpha_search_max " << kAlphaSearchMax << "; ";
  if (first_theta) {
    m << "first present theta " << fmt("%.2f", *first_theta) << " (alpha " << fmt("%.4f", *first_alpha)
      << "); alpha > 1 at every present sample: " << (all_above_one ? "yes" : "no");
  } else {
    m << "curve absent everywhere";
  }
  return {6, "theta* bracket", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(), secs};
}

CriterionResult most_unstable_frequency() {
  const auto t0 = Clock::now();
  const auto grid = linspace(0.0, 20.0, 801);
  bool ok = true;
  std::ostringstream m;
  for (const ModelParams p : {ModelParams{0.1, 0.4}, ModelParams{0.4, 0.4}, ModelParams{0.1, 0.1},
                              ModelParams{0.2, 0.1}, ModelParams{0.4, 0.1}}) {
    const auto c = dispersion_curve(p, grid, kSearchMax);
    const bool interior = has_interior_maximum(c) && c.omega_star && *c.omega_star > 0.0;
    ok = ok && interior;
    m << "(theta " << p.theta << ", alpha " << p.alpha << "): ";
    if (c.omega_star) {
      m << "omega* " << fmt("%.3f", *c.omega_star) << " lambda* " << fmt("%.4f", *c.lambda_star);
    } else {
      m << "no roots";
    }
    m << (interior ? " interior; " : " NOT interior; ");
  }
  return {7, "most unstable frequency", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(),
          seconds_since(t0)};
}

struct DriftLog {
  double worst = 0.0;
  int runs = 0;
  void add(const RunResult& r) {
    worst = std::max(worst, r.mass_drift_per_unit_time);
    ++runs;
  }
};

SimConfig planar_1d(double alpha, double theta, double dx, double t_end) {
  SimConfig c;
  c.params = {alpha, theta};
  c.dimension = 1;
  c.lx = 40.0;
  c.dx = dx;
  c.dt = 0.25 * dx;
  c.t_end = t_end;
  return c;
}

CriterionResult speed_crosscheck(DriftLog& drift) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream m;
  for (const auto& [theta, t_end] : {std::pair{0.5, 20.0}, std::pair{0.1, 8.0}}) {
    const ModelParams p{0.25, theta};
    const double sigma = wave_constants(p).sigma;
    double err[2] = {1.0, 1.0};
    double secs[2] = {0.0, 0.0};
    for (int level = 0; level < 2; ++level) {
      const auto r = run(planar_1d(p.alpha, p.theta, level == 0 ? 0.01 : 0.005, t_end));
      drift.add(r);
      secs[level] = r.wall_seconds;
      err[level] = r.metrics.measured_speed ? rel(*r.metrics.measured_speed, sigma) : 1.0;
    }
    const bool pass = err[0] < kSpeedRelTol && (err[1] <= 0.5 * err[0] || err[1] < kRefinedSpeedRelTol) &&
                      secs[0] < 60.0 && secs[1] < 60.0;
    ok = ok && pass;
    m << "theta " << theta << ": sigma " << fmt("%.5f", sigma) << ", rel err dx=0.01 "
      << fmt("%.2e", err[0]) << ", dx=0.005 " << fmt("%.2e", err[1]) << " (" << fmt("%.1f", secs[0])
      << "+" << fmt("%.1f", secs[1]) << " s); ";
  }
  return {8, "speed cross-check", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(),
          seconds_since(t0)};
}

CriterionResult growth_crosscheck(DriftLog& drift) {
  const auto t0 = Clock::now();
  std::ostringstream m;

  // Unstable: strip at the most unstable resolved frequency.
  const ModelParams pu{0.01, 0.1};
  const auto curve = dispersion_curve(pu, linspace(0.0, 30.0, 61), kSearchMax);
  const double omega_u = curve.omega_star.value_or(8.5);
  SimConfig cu;
  cu.params = pu;
  cu.dimension = 2;
  cu.lx = 4.0;
  cu.ly = std::numbers::pi / omega_u;
  cu.ny = 32;
  cu.dx = 0.001;
  cu.dt = 0.000625;
  cu.t_end = 1.2;
  cu.perturb_eps = 5e-4;
  cu.perturb_omega = omega_u;
  const auto ru = run(cu);
  drift.add(ru);
  const double pred_u = solve_growth_rate(pu, omega_u, kSearchMax).value_or(NAN);
  const bool ok_u = ru.metrics.measured_growth_rate && *ru.metrics.measured_growth_rate > 0.0 &&
                    rel(*ru.metrics.measured_growth_rate, pred_u) < kGrowthRelTol;

  // Stable: planar wave at (0.25, 0.5) with a clearly negative predicted rate.
  const ModelParams ps{0.25, 0.5};
  const double omega_s = 2.0;
  SimConfig cs;
  cs.params = ps;
  cs.dimension = 2;
  cs.lx = 16.0;
  cs.ly = std::numbers::pi / omega_s;
  cs.ny = 32;
  cs.dx = 0.01;
  cs.dt = 0.0025;
  cs.t_end = 4.0;
  cs.perturb_eps = 1e-2;
  cs.perturb_omega = omega_s;
  const auto rs = run(cs);
  drift.add(rs);
  const double pred_s = solve_growth_rate(ps, omega_s, kSearchMax).value_or(NAN);
  const bool ok_s = rs.metrics.measured_growth_rate && *rs.metrics.measured_growth_rate < 0.0;

  const double secs = seconds_since(t0);
  auto show = [](const RunResult& r) {
    return r.metrics.measured_growth_rate ? fmt("%.4f", *r.metrics.measured_growth_rate)
                                          : std::string("absent");
  };
  m << "(0.01,0.1) omega " << fmt("%.3f", omega_u) << ": measured " << show(ru) << ", predicted "
    << fmt("%.4f", pred_u);
  if (ru.metrics.measured_growth_rate) m << " (rel err " << fmt("%.3f", rel(*ru.metrics.measured_growth_rate, pred_u)) << ")";
  m << "; (0.25,0.5) omega " << omega_s << ": measured " << show(rs) << ", predicted "
    << fmt("%.4f", pred_s) << "; " << fmt("%.0f s", secs);
  const bool ok = ok_u && ok_s && secs < 600.0;
  return {9, "growth-rate cross-check", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(),
          secs};
}

SimConfig disc_emulation(double alpha, double t_end) {
  SimConfig c;
  c.params = {alpha, 0.1};
  c.dimension = 2;
  c.init = InitKind::disc;
  c.lx = c.ly = 8.0;
  c.x_origin = c.y_origin = -4.0;
  c.dx = 8.0 / 512.0;
  c.dt = 0.0025;
  c.t_end = t_end;
  c.disc_radius = 0.4;
  return c;
}

CriterionResult fingering(DriftLog& drift) {
  const auto t0 = Clock::now();
  const auto unstable = run(disc_emulation(0.01, 2.0));
  drift.add(unstable);
  const auto stable = run(disc_emulation(0.25, 1.0));
  drift.add(stable);
  const double secs = seconds_since(t0);
  const double max_u = unstable.metrics.max_roughness.value_or(0.0);
  const double max_s = stable.metrics.max_roughness.value_or(INFINITY);
  const bool ok = max_u > kRoughFingered && max_s < kRoughStable && secs < 900.0;
  std::ostringstream m;
  m << "alpha 0.01: max roughness " << fmt("%.4f", max_u) << " (final " << fmt("%.4f", unstable.metrics.roughness.value_or(0.0))
    << ", radius " << fmt("%.3f", unstable.metrics.front_position) << "); alpha 0.25: max roughness "
    << fmt("%.4f", max_s) << " (final " << fmt("%.4f", stable.metrics.roughness.value_or(0.0)) << ", radius "
    << fmt("%.3f", stable.metrics.front_position) << "); " << fmt("%.0f s", secs);
  return {10, "fingering regime", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(), secs};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  Recorder rec{opts, {}};
  rec.add(identity_suite());
  rec.add(profile_residuals());
  rec.add(case1_limit());
  rec.add(case2_convergence());
  rec.add(instability_region());
  rec.add(theta_star_bracket());
  rec.add(most_unstable_frequency());
  DriftLog drift;
  rec.add(speed_crosscheck(drift));
  if (opts.full) {
    rec.add(growth_crosscheck(drift));
    rec.add(fingering(drift));
  } else {
    rec.add({9, "growth-rate cross-check", CriterionStatus::skip, "2D run skipped in quick mode", 0.0});
    rec.add({10, "fingering regime", CriterionStatus::skip, "2D run skipped in quick mode", 0.0});
  }
  const bool ok = drift.worst < kMassDriftPerTime;
  std::ostringstream m;
  m << "max relative drift per unit time " << fmt("%.2e", drift.worst) << " over " << drift.runs << " runs";
  rec.add({11, "conservation", ok ? CriterionStatus::pass : CriterionStatus::fail, m.str(), 0.0});
  return rec.results;
}

const char* status_label(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::pass: return "PASS";
    case CriterionStatus::fail: return "FAIL";
    case CriterionStatus::skip: return "SKIP";
  }
  return "FAIL";
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << status_label(r.status) << ' ' << r.id << ' ' << r.name << ": " << r.measured;
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (r.status == CriterionStatus::fail) return false;
  }
  return true;
}

}  // namespace frontstab
