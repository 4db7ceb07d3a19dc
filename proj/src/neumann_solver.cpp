#include "frontstab/neumann_solver.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "frontstab/errors.hpp"

namespace frontstab {

namespace {

// FFTW planning is not thread-safe; execution with distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

double neumann_eigenvalue(int k, int n, double h) {
  const double s = std::sin(std::numbers::pi * k / (2.0 * n));
  return 4.0 * s * s / (h * h);
}

}  // namespace

void apply_laplacian(const Grid& g, std::span<const double> in, std::span<double> out) {
  const double ix2 = 1.0 / (g.dx * g.dx);
  if (g.dimension() == 1) {
    const int n = g.nx;
    for (int i = 0; i < n; ++i) {
      const double left = in[i > 0 ? i - 1 : 0];
      const double right = in[i + 1 < n ? i + 1 : n - 1];
      out[i] = (left - 2.0 * in[i] + right) * ix2;
    }
    return;
  }
  const double iy2 = 1.0 / (g.dy * g.dy);
  for (int j = 0; j < g.ny; ++j) {
    const int jm = j > 0 ? j - 1 : 0;
    const int jp = j + 1 < g.ny ? j + 1 : g.ny - 1;
    for (int i = 0; i < g.nx; ++i) {
      const int im = i > 0 ? i - 1 : 0;
      const int ip = i + 1 < g.nx ? i + 1 : g.nx - 1;
      const double c = in[g.index(i, j)];
      out[g.index(i, j)] = (in[g.index(im, j)] - 2.0 * c + in[g.index(ip, j)]) * ix2 +
                           (in[g.index(i, jm)] - 2.0 * c + in[g.index(i, jp)]) * iy2;
    }
  }
}

struct NeumannHelmholtzSolver::SpectralPlan {
  double* buffer = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::vector<double> inverse_symbol;  // 1 / (1 + coeff * (kx + ky)), normalized

  ~SpectralPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    if (buffer) fftw_free(buffer);
  }
};

NeumannHelmholtzSolver::NeumannHelmholtzSolver(const Grid& grid, double coeff, double tolerance)
    : grid_(grid), coeff_(coeff), tolerance_(tolerance), scratch_(grid.size()) {
  if (grid.nx < 1 || grid.ny < 1) throw DomainError("NeumannHelmholtzSolver: empty grid");
  if (!(coeff >= 0.0)) throw DomainError("NeumannHelmholtzSolver: coefficient must be nonnegative");

  if (grid.dimension() == 1) {
    const int n = grid.nx;
    const double r = coeff / (grid.dx * grid.dx);
    diag_inv_.resize(n);
    upper_.assign(n, -r);
    // Thomas factorization of tridiag(-r, 1 + 2r, -r) with reflected ends.
    double prev_c = 0.0;
    for (int i = 0; i < n; ++i) {
      const double off_left = i > 0 ? r : 0.0;
      const double off_right = i + 1 < n ? r : 0.0;
      const double diag = 1.0 + off_left + off_right;
      const double d = diag - (i > 0 ? -r * prev_c : 0.0);
      diag_inv_[i] = 1.0 / d;
      prev_c = (i + 1 < n ? -r : 0.0) * diag_inv_[i];
    }
    return;
  }

  plan_ = std::make_unique<SpectralPlan>();
  const int nx = grid.nx;
  const int ny = grid.ny;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_->buffer = fftw_alloc_real(grid.size());
    plan_->forward = fftw_plan_r2r_2d(ny, nx, plan_->buffer, plan_->buffer, FFTW_REDFT10,
                                      FFTW_REDFT10, FFTW_ESTIMATE);
    plan_->backward = fftw_plan_r2r_2d(ny, nx, plan_->buffer, plan_->buffer, FFTW_REDFT01,
                                       FFTW_REDFT01, FFTW_ESTIMATE);
  }
  if (!plan_->forward || !plan_->backward) throw SolverFailure("FFTW planning failed");

  // Unnormalized DCT-II followed by DCT-III scales by 2nx * 2ny.
  const double norm = 1.0 / (4.0 * nx * ny);
  plan_->inverse_symbol.resize(grid.size());
  for (int j = 0; j < ny; ++j) {
    const double ky = neumann_eigenvalue(j, ny, grid.dy);
    for (int i = 0; i < nx; ++i) {
      const double kx = neumann_eigenvalue(i, nx, grid.dx);
      plan_->inverse_symbol[grid.index(i, j)] = norm / (1.0 + coeff * (kx + ky));
    }
  }
}

NeumannHelmholtzSolver::~NeumannHelmholtzSolver() = default;
NeumannHelmholtzSolver::NeumannHelmholtzSolver(NeumannHelmholtzSolver&&) noexcept = default;
NeumannHelmholtzSolver& NeumannHelmholtzSolver::operator=(NeumannHelmholtzSolver&&) noexcept = default;

void NeumannHelmholtzSolver::solve(std::span<const double> b, std::span<double> x) {
  if (b.size() != grid_.size() || x.size() != grid_.size()) {
    throw DomainError("NeumannHelmholtzSolver: size mismatch");
  }
  if (grid_.dimension() == 1) {
    solve_tridiagonal(b, x);
  } else {
    solve_spectral(b, x);
  }
  last_residual_ = relative_residual(b, x);
  if (!(last_residual_ < tolerance_)) {
    std::ostringstream msg;
    msg << "linear solve stalled: relative residual " << last_residual_ << " >= " << tolerance_;
    throw SolverFailure(msg.str());
  }
}

void NeumannHelmholtzSolver::solve_tridiagonal(std::span<const double> b, std::span<double> x) {
  const int n = grid_.nx;
  const double r = coeff_ / (grid_.dx * grid_.dx);
  // Forward sweep: scratch holds the modified right-hand side.
  for (int i = 0; i < n; ++i) {
    const double carry = i > 0 ? r * scratch_[i - 1] : 0.0;
    scratch_[i] = (b[i] + carry) * diag_inv_[i];
  }
  x[n - 1] = scratch_[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    x[i] = scratch_[i] + r * diag_inv_[i] * x[i + 1];
  }
}

void NeumannHelmholtzSolver::solve_spectral(std::span<const double> b, std::span<double> x) {
  double* buf = plan_->buffer;
  const std::size_t n = grid_.size();
  for (std::size_t k = 0; k < n; ++k) buf[k] = b[k];
  fftw_execute(plan_->forward);
  for (std::size_t k = 0; k < n; ++k) buf[k] *= plan_->inverse_symbol[k];
  fftw_execute(plan_->backward);
  for (std::size_t k = 0; k < n; ++k) x[k] = buf[k];
}

double NeumannHelmholtzSolver::relative_residual(std::span<const double> b,
                                                 std::span<const double> x) {
  apply_laplacian(grid_, x, scratch_);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double r = b[k] - (x[k] - coeff_ * scratch_[k]);
    num += r * r;
    den += b[k] * b[k];
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

}  // namespace frontstab
