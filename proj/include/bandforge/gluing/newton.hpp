#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "bandforge/error.hpp"
#include "bandforge/gluing/equations.hpp"

namespace bandforge::gluing {

enum class SolveFailure { singular, divergence, half_plane_exit };

inline const char* to_string(SolveFailure f) {
  switch (f) {
    case SolveFailure::singular: return "singular";
    case SolveFailure::divergence: return "divergence";
    case SolveFailure::half_plane_exit: return "half_plane_exit";
  }
  return "unknown";
}

class SolveError : public Error {
 public:
  SolveError(SolveFailure kind, const std::string& what) : Error(what), kind_(kind) {}
  SolveFailure kind() const { return kind_; }

 private:
  SolveFailure kind_;
};

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// d(row)/dz_j = log_z/z_j - log_one_minus_z/(1 - z_j)
inline ComplexMatrix jacobian(const GluingSystem& sys, const std::vector<int>& rows, const ShapeVector& z) {
  ComplexMatrix j = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows.size()), sys.tet_count);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = sys.rows[rows[r]];
    for (int k = 0; k < sys.tet_count; ++k)
      j(static_cast<Eigen::Index>(r), k) =
          static_cast<double>(row.log_z[k]) / z[k] - static_cast<double>(row.log_one_minus_z[k]) / (1.0 - z[k]);
  }
  return j;
}

/// All cusp rows, then edge rows in index order, keeping each row whose
/// Jacobian at z is independent of the rows already kept (modified
/// Gram–Schmidt with a relative threshold).
inline std::vector<int> select_square_rows(const GluingSystem& sys, const ShapeVector& z) {
  std::vector<int> order;
  for (int r = 0; r < static_cast<int>(sys.rows.size()); ++r)
    if (sys.rows[r].kind != RowKind::edge) order.push_back(r);
  for (int r = 0; r < static_cast<int>(sys.rows.size()); ++r)
    if (sys.rows[r].kind == RowKind::edge) order.push_back(r);

  const ComplexMatrix full = jacobian(sys, order, z);
  std::vector<ComplexVector> basis;
  std::vector<int> picked;
  for (std::size_t k = 0; k < order.size() && static_cast<int>(picked.size()) < sys.tet_count; ++k) {
    ComplexVector v = full.row(static_cast<Eigen::Index>(k)).transpose();
    const double norm = v.norm();
    for (const auto& b : basis) v -= b.dot(v) * b;
    if (norm == 0.0 || v.norm() <= 1e-8 * norm) {
      if (sys.rows[order[k]].kind != RowKind::edge)
        throw SolveError(SolveFailure::singular, "cusp equations are linearly dependent at the initial point");
      continue;
    }
    basis.push_back(v / v.norm());
    picked.push_back(order[k]);
  }
  if (static_cast<int>(picked.size()) != sys.tet_count)
    throw SolveError(SolveFailure::singular, "gluing equations have rank " + std::to_string(picked.size()) +
                                                 " < " + std::to_string(sys.tet_count) + " at the initial point");
  return picked;
}

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
};

struct NewtonResult {
  ShapeVector shapes;
  int iterations = 0;
  double max_residual = 0.0;  // over every row, not only the square subsystem
  std::vector<int> selected_rows;
  std::vector<double> residual_history;  // full-system max residual per iterate, starting point first
};

/// Newton's method in log coordinates w_j = log z_j on the square
/// subsystem chosen at the initial point. Stops once the full system's max
/// residual is below tol.
inline NewtonResult newton_solve(const GluingSystem& sys, const ShapeVector& initial, NewtonOptions opts = {}) {
  if (static_cast<int>(initial.size()) != sys.tet_count)
    throw DomainError("newton_solve: initial shape vector has the wrong length");
  if (!is_geometric(initial))
    throw SolveError(SolveFailure::half_plane_exit, "newton_solve: initial shapes must lie in the upper half-plane");

  NewtonResult out;
  out.shapes = initial;
  out.selected_rows = select_square_rows(sys, initial);
  const auto n = static_cast<Eigen::Index>(sys.tet_count);
  for (int iter = 0;; ++iter) {
    out.max_residual = max_residual(sys, out.shapes);
    out.residual_history.push_back(out.max_residual);
    out.iterations = iter;
    if (!std::isfinite(out.max_residual))
      throw SolveError(SolveFailure::divergence, "newton_solve: residual is not finite");
    if (out.max_residual < opts.tol) return out;
    if (iter >= opts.max_iter)
      throw SolveError(SolveFailure::divergence, "newton_solve: no convergence after " + std::to_string(opts.max_iter) +
                                                     " iterations (residual " + std::to_string(out.max_residual) + ")");

    ComplexVector f(n);
    for (Eigen::Index r = 0; r < n; ++r) f(r) = row_value(sys.rows[out.selected_rows[r]], out.shapes);
    // Chain rule for w = log z: df/dw_j = z_j · df/dz_j.
    ComplexMatrix jac = jacobian(sys, out.selected_rows, out.shapes);
    for (Eigen::Index k = 0; k < n; ++k) jac.col(k) *= out.shapes[k];
    const Eigen::PartialPivLU<ComplexMatrix> lu(jac);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-14)) throw SolveError(SolveFailure::singular, "newton_solve: Jacobian is singular");
    const ComplexVector step = lu.solve(-f);
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex w = std::log(out.shapes[k]) + step(k);
      const Complex z = std::exp(w);
      if (!(z.imag() > 0))
        throw SolveError(SolveFailure::half_plane_exit,
                         "newton_solve: shape " + std::to_string(k) + " left the upper half-plane");
      out.shapes[k] = z;
    }
  }
}

}  // namespace bandforge::gluing
