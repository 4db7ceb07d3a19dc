#pragma once

#include <cstddef>

namespace frontstab {

/// Uniform cell-centered grid on [x0, x0 + nx*dx] x [y0, y0 + ny*dy]; ny == 1 for 1D.
/// Storage is row-major with x fastest: index(i, j) = j * nx + i.
struct Grid {
  int nx = 1;
  int ny = 1;
  double dx = 1.0;
  double dy = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;

  int dimension() const { return ny > 1 ? 2 : 1; }
  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  double x(int i) const { return x0 + (i + 0.5) * dx; }
  double y(int j) const { return y0 + (j + 0.5) * dy; }
  double lx() const { return nx * dx; }
  double ly() const { return ny * dy; }
  double cell_area() const { return dimension() == 2 ? dx * dy : dx; }
};

}  // namespace frontstab
