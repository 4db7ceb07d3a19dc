#pragma once

#include <memory>
#include <span>
#include <vector>

#include "frontstab/grid.hpp"

namespace frontstab {

/// Five-point (2D) or three-point (1D) Laplacian with homogeneous Neumann
/// conditions imposed by ghost-cell reflection.
void apply_laplacian(const Grid& grid, std::span<const double> in, std::span<double> out);

/// Solves (I - coeff * Lap_h) x = b. Tridiagonal elimination in 1D; in 2D the
/// operator is diagonal in the cosine basis (DCT-II), so the solve is exact up
/// to rounding. Every solve is checked against the residual tolerance.
class NeumannHelmholtzSolver {
 public:
  NeumannHelmholtzSolver(const Grid& grid, double coeff, double tolerance = 1e-10);
  ~NeumannHelmholtzSolver();
  NeumannHelmholtzSolver(NeumannHelmholtzSolver&&) noexcept;
  NeumannHelmholtzSolver& operator=(NeumannHelmholtzSolver&&) noexcept;
  NeumannHelmholtzSolver(const NeumannHelmholtzSolver&) = delete;
  NeumannHelmholtzSolver& operator=(const NeumannHelmholtzSolver&) = delete;

  /// Overwrites x. Throws SolverFailure if ||b - A x|| / ||b|| >= tolerance.
  void solve(std::span<const double> b, std::span<double> x);

  /// Relative 2-norm residual of the last solve.
  double last_relative_residual() const { return last_residual_; }

  double coeff() const { return coeff_; }
  const Grid& grid() const { return grid_; }

 private:
  struct SpectralPlan;

  void solve_tridiagonal(std::span<const double> b, std::span<double> x);
  void solve_spectral(std::span<const double> b, std::span<double> x);
  double relative_residual(std::span<const double> b, std::span<const double> x);

  Grid grid_;
  double coeff_;
  double tolerance_;
  double last_residual_ = 0.0;
  std::vector<double> scratch_;
  // 1D: forward-elimination multipliers of the constant tridiagonal matrix.
  std::vector<double> diag_inv_;
  std::vector<double> upper_;
  std::unique_ptr<SpectralPlan> plan_;
};

}  // namespace frontstab
