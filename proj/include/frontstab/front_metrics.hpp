#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frontstab/grid.hpp"

namespace frontstab {

/// Rightmost crossing of `level` by a row sampled at x0 + (i + 0.5) dx, i.e.
/// the largest i with row[i] > level >= row[i+1], linearly interpolated.
std::optional<double> rightmost_crossing(std::span<const double> row, double x_first, double dx,
                                         double level);

/// 1D front position. Throws NoCrossingError.
double front_position_1d(const Grid& grid, std::span<const double> u, double theta);

/// Front line x_f(y_j) of a 2D strip, one crossing per row. Throws
/// NoCrossingError if any row lacks a crossing.
std::vector<double> front_line(const Grid& grid, std::span<const double> u, double theta);

/// |(2/Ny) sum_j (x_f(y_j) - mean) cos(omega y_j)|.
double mode_amplitude(const Grid& grid, std::span<const double> line, double omega);

/// Length of the theta-contour of u (marching squares over cell centers).
double contour_length(const Grid& grid, std::span<const double> u, double theta);

/// Area of {u > theta}, counted by cells.
double burnt_area(const Grid& grid, std::span<const double> u, double theta);

/// Perimeter of the theta-contour over the circumference of the circle of
/// equal area. Equals 1 for a disc up to discretization error. Throws
/// NoCrossingError if the region is empty.
double roughness(const Grid& grid, std::span<const double> u, double theta);

struct TracePoint {
  double t = 0.0;
  double value = 0.0;
};

/// Least-squares slope of value against t over points with t > window_start.
/// Throws DomainError with fewer than 10 points in the window.
double measure_speed(std::span<const TracePoint> trace, double window_start);

struct GrowthMeasurement {
  double rate = 0.0;
  std::vector<std::string> warnings;
};

/// Least-squares slope of ln(amplitude) against t over t > window_start.
/// Throws AmplitudeUnderflow if any amplitude in the window is below 1e-12 and
/// DomainError with fewer than 10 points. Warns once if an amplitude exceeds
/// saturation_level.
GrowthMeasurement measure_growth_rate(std::span<const TracePoint> trace, double window_start,
                                      double saturation_level);

}  // namespace frontstab
