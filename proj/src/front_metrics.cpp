#include "frontstab/front_metrics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "frontstab/errors.hpp"

namespace frontstab {

namespace {

constexpr int kMinWindowPoints = 10;
constexpr double kAmplitudeFloor = 1e-12;

double least_squares_slope(const std::vector<double>& t, const std::vector<double>& y) {
  const double n = static_cast<double>(t.size());
  double mt = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    mt += t[k];
    my += y[k];
  }
  mt /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    sxy += (t[k] - mt) * (y[k] - my);
    sxx += (t[k] - mt) * (t[k] - mt);
  }
  if (sxx == 0.0) throw DomainError("least-squares fit: all samples at the same time");
  return sxy / sxx;
}

void require_window(std::size_t n, double window_start) {
  if (n < static_cast<std::size_t>(kMinWindowPoints)) {
    std::ostringstream msg;
    msg << "need at least " << kMinWindowPoints << " samples after t = " << window_start
        << ", got " << n;
    throw DomainError(msg.str());
  }
}

}  // namespace

std::optional<double> rightmost_crossing(std::span<const double> row, double x_first, double dx,
                                         double level) {
  for (std::size_t i = row.size(); i-- > 1;) {
    const double a = row[i - 1];
    const double b = row[i];
    if (a > level && b <= level) {
      return x_first + (static_cast<double>(i - 1) + (a - level) / (a - b)) * dx;
    }
  }
  return std::nullopt;
}

double front_position_1d(const Grid& grid, std::span<const double> u, double theta) {
  auto x = rightmost_crossing(u.first(grid.nx), grid.x(0), grid.dx, theta);
  if (!x) throw NoCrossingError("u never crosses theta");
  return *x;
}

std::vector<double> front_line(const Grid& grid, std::span<const double> u, double theta) {
  std::vector<double> line(grid.ny);
  for (int j = 0; j < grid.ny; ++j) {
    auto x = rightmost_crossing(u.subspan(grid.index(0, j), grid.nx), grid.x(0), grid.dx, theta);
    if (!x) {
      std::ostringstream msg;
      msg << "u never crosses theta in row " << j;
      throw NoCrossingError(msg.str());
    }
    line[j] = *x;
  }
  return line;
}

double mode_amplitude(const Grid& grid, std::span<const double> line, double omega) {
  const double n = static_cast<double>(line.size());
  double mean = 0.0;
  for (double x : line) mean += x;
  mean /= n;
  double acc = 0.0;
  for (int j = 0; j < static_cast<int>(line.size()); ++j) {
    acc += (line[j] - mean) * std::cos(omega * grid.y(j));
  }
  return std::fabs(2.0 * acc / n);
}

double contour_length(const Grid& grid, std::span<const double> u, double theta) {
  double total = 0.0;
  const double dx = grid.dx;
  const double dy = grid.dy;
  auto frac = [theta](double a, double b) { return (theta - a) / (b - a); };
  for (int j = 0; j + 1 < grid.ny; ++j) {
    for (int i = 0; i + 1 < grid.nx; ++i) {
      // Corners counterclockwise from bottom-left.
      const double c0 = u[grid.index(i, j)];
      const double c1 = u[grid.index(i + 1, j)];
      const double c2 = u[grid.index(i + 1, j + 1)];
      const double c3 = u[grid.index(i, j + 1)];
      const int mask = (c0 > theta ? 1 : 0) | (c1 > theta ? 2 : 0) | (c2 > theta ? 4 : 0) |
                       (c3 > theta ? 8 : 0);
      if (mask == 0 || mask == 15) continue;

      // Edge crossing points in cell-local coordinates.
      struct P {
        double x, y;
      };
      const P bottom{frac(c0, c1) * dx, 0.0};
      const P right{dx, frac(c1, c2) * dy};
      const P top{frac(c3, c2) * dx, dy};
      const P left{0.0, frac(c0, c3) * dy};
      auto seg = [](P a, P b) { return std::hypot(a.x - b.x, a.y - b.y); };

      switch (mask) {
        case 1: case 14: total += seg(left, bottom); break;
        case 2: case 13: total += seg(bottom, right); break;
        case 4: case 11: total += seg(right, top); break;
        case 8: case 7: total += seg(top, left); break;
        case 3: case 12: total += seg(left, right); break;
        case 6: case 9: total += seg(bottom, top); break;
        case 5: case 10: {
          // Saddle: resolve with the mean of the corners.
          const bool center_in = 0.25 * (c0 + c1 + c2 + c3) > theta;
          const bool diag_02 = (mask == 5);
          if (center_in == diag_02) {
            total += seg(left, top) + seg(bottom, right);
          } else {
            total += seg(left, bottom) + seg(right, top);
          }
          break;
        }
        default: break;
      }
    }
  }
  return total;
}

double burnt_area(const Grid& grid, std::span<const double> u, double theta) {
  std::size_t count = 0;
  for (double x : u) count += x > theta ? 1 : 0;
  return static_cast<double>(count) * grid.dx * grid.dy;
}

double roughness(const Grid& grid, std::span<const double> u, double theta) {
  const double area = burnt_area(grid, u, theta);
  if (area <= 0.0) throw NoCrossingError("roughness: region {u > theta} is empty");
  const double radius = std::sqrt(area / std::numbers::pi);
  return contour_length(grid, u, theta) / (2.0 * std::numbers::pi * radius);
}

double measure_speed(std::span<const TracePoint> trace, double window_start) {
  std::vector<double> t;
  std::vector<double> y;
  for (const auto& p : trace) {
    if (p.t > window_start) {
      t.push_back(p.t);
      y.push_back(p.value);
    }
  }
  require_window(t.size(), window_start);
  return least_squares_slope(t, y);
}

GrowthMeasurement measure_growth_rate(std::span<const TracePoint> trace, double window_start,
                                      double saturation_level) {
  GrowthMeasurement out;
  std::vector<double> t;
  std::vector<double> y;
  bool saturated = false;
  for (const auto& p : trace) {
    if (p.t <= window_start) continue;
    if (!(p.value >= kAmplitudeFloor)) {
      std::ostringstream msg;
      msg << "mode amplitude " << p.value << " below " << kAmplitudeFloor << " at t = " << p.t;
      throw AmplitudeUnderflow(msg.str());
    }
    if (p.value > saturation_level) saturated = true;
    t.push_back(p.t);
    y.push_back(std::log(p.value));
  }
  require_window(t.size(), window_start);
  out.rate = least_squares_slope(t, y);
  if (saturated) {
    std::ostringstream msg;
    msg << "mode amplitude exceeds " << saturation_level
        << " (10% of the wave width); growth may be nonlinearly saturated";
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace frontstab
