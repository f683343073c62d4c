#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "bandforge/error.hpp"
#include "bandforge/gluing/bloch_wigner.hpp"
#include "bandforge/gluing/equations.hpp"
#include "bandforge/gluing/newton.hpp"
#include "bandforge/tri/triangulation.hpp"
#include "bandforge/tri/validate.hpp"
#include "bandforge/verified/bloch_wigner.hpp"
#include "bandforge/verified/interval.hpp"

namespace bandforge::verified {

/// Outcome of a Krawczyk containment test around an approximate solution.
///
/// When valid(), the square gluing subsystem has exactly one solution in the
/// box of half-width radius_used, it lies in `enclosures`, and all of its
/// shapes have positive imaginary part.
struct Certificate {
  std::string manifold_name;
  bool contracted = false;
  bool all_imag_positive = false;
  std::vector<ComplexInterval> enclosures;
  RealInterval volume_enclosure;
  double radius_used = 0.0;
  double approx_residual = 0.0;  // max residual of the full system at the center
  std::vector<int> selected_rows;

  bool valid() const { return contracted && all_imag_positive; }
};

class CertifyError : public Error {
 public:
  CertifyError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  // validate | equations | solve | krawczyk
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

namespace detail {

inline ComplexInterval row_value(const gluing::EquationRow& row, const std::vector<ComplexInterval>& z,
                                 const std::vector<ComplexInterval>& log_z,
                                 const std::vector<ComplexInterval>& log_one_minus_z) {
  ComplexInterval sum(0.0);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (row.log_z[j] != 0) sum = sum + RealInterval::point(row.log_z[j]) * log_z[j];
    if (row.log_one_minus_z[j] != 0) sum = sum + RealInterval::point(row.log_one_minus_z[j]) * log_one_minus_z[j];
  }
  const RealInterval constant = RealInterval::point(row.branch - row.rhs) * pi_interval();
  return sum + ComplexInterval(RealInterval::point(0.0), constant);
}

// Interval Jacobian entry: log_z/z - log_one_minus_z/(1 - z).
inline ComplexInterval jacobian_entry(const gluing::EquationRow& row, int j, const ComplexInterval& inv_z,
                                      const ComplexInterval& inv_one_minus_z) {
  ComplexInterval out(0.0);
  if (row.log_z[j] != 0) out = out + RealInterval::point(row.log_z[j]) * inv_z;
  if (row.log_one_minus_z[j] != 0) out = out - RealInterval::point(row.log_one_minus_z[j]) * inv_one_minus_z;
  return out;
}

}  // namespace detail

/// Krawczyk test K(X) ⊂ int X for the square subsystem selected at
/// `approx`, where X is the box approx ± radius and
///
///   K(X) = y - Y f(y) + (I - Y Df(X)) (X - y),
///
/// y = approx, Y a floating-point inverse of Df(y) used as exact constants.
inline Certificate krawczyk_test(const gluing::GluingSystem& sys, const gluing::ShapeVector& approx, double radius,
                                 std::string name = {}) {
  if (!(radius > 0)) throw DomainError("krawczyk_test: radius must be positive");
  const int n = sys.tet_count;
  if (static_cast<int>(approx.size()) != n) throw DomainError("krawczyk_test: shape vector has the wrong length");

  Certificate cert;
  cert.manifold_name = std::move(name);
  cert.radius_used = radius;
  cert.approx_residual = gluing::max_residual(sys, approx);
  cert.selected_rows = gluing::select_square_rows(sys, approx);

  const gluing::ComplexMatrix jac = gluing::jacobian(sys, cert.selected_rows, approx);
  const Eigen::PartialPivLU<gluing::ComplexMatrix> lu(jac);
  if (!(lu.rcond() > 1e-14)) throw CertifyError("krawczyk", "midpoint Jacobian is not invertible");
  const gluing::ComplexMatrix y_inv = lu.inverse();
  if (!y_inv.allFinite()) throw CertifyError("krawczyk", "midpoint Jacobian inverse is not finite");

  std::vector<ComplexInterval> center(n), box(n);
  for (int j = 0; j < n; ++j) {
    center[j] = ComplexInterval(approx[j]);
    box[j] = ComplexInterval::around(approx[j], radius);
  }

  // f(y) in interval arithmetic at the exact center.
  std::vector<ComplexInterval> log_c(n), log_1mc(n);
  for (int j = 0; j < n; ++j) {
    log_c[j] = log(center[j]);
    log_1mc[j] = log(ComplexInterval(1.0) - center[j]);
  }
  std::vector<ComplexInterval> fy(n);
  for (int r = 0; r < n; ++r) fy[r] = detail::row_value(sys.rows[cert.selected_rows[r]], center, log_c, log_1mc);

  // Df(X).
  std::vector<ComplexInterval> inv_x(n), inv_1mx(n);
  for (int j = 0; j < n; ++j) {
    inv_x[j] = reciprocal(box[j]);
    inv_1mx[j] = reciprocal_one_minus(box[j]);
  }
  std::vector<std::vector<ComplexInterval>> dfx(n, std::vector<ComplexInterval>(n));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j)
      dfx[r][j] = detail::jacobian_entry(sys.rows[cert.selected_rows[r]], j, inv_x[j], inv_1mx[j]);

  std::vector<ComplexInterval> delta(n);  // X - y
  for (int j = 0; j < n; ++j) delta[j] = box[j] - center[j];

  cert.enclosures.resize(n);
  for (int i = 0; i < n; ++i) {
    // y_i - (Y f(y))_i
    ComplexInterval yf(0.0);
    for (int r = 0; r < n; ++r) yf = yf + ComplexInterval(y_inv(i, r)) * fy[r];
    ComplexInterval k = center[i] - yf;
    // ((I - Y Df(X)) (X - y))_i
    for (int j = 0; j < n; ++j) {
      ComplexInterval m(i == j ? 1.0 : 0.0);
      for (int r = 0; r < n; ++r) m = m - ComplexInterval(y_inv(i, r)) * dfx[r][j];
      k = k + m * delta[j];
    }
    cert.enclosures[i] = k;
  }

  cert.contracted = true;
  cert.all_imag_positive = true;
  for (int j = 0; j < n; ++j) {
    if (!box[j].interior_contains(cert.enclosures[j])) cert.contracted = false;
    if (!(cert.enclosures[j].im().lo() > 0)) cert.all_imag_positive = false;
  }

  // Volume over the tighter of the two boxes known to hold the solution.
  RealInterval vol = RealInterval::point(0.0);
  bool vol_ok = true;
  for (int j = 0; j < n && vol_ok; ++j) {
    const ComplexInterval& b = cert.contracted ? cert.enclosures[j] : box[j];
    if (b.im().contains(0.0)) {
      vol_ok = false;
      break;
    }
    vol = vol + bloch_wigner(b);
  }
  cert.volume_enclosure = vol_ok ? vol : RealInterval(-INFINITY, INFINITY);
  return cert;
}

inline constexpr std::array<double, 3> kRadiusLadder{1e-10, 1e-8, 1e-6};

/// validate -> build_equations -> Newton from the file's shapes ->
/// Krawczyk over kRadiusLadder (first valid certificate wins). Stage
/// failures are rethrown as CertifyError tagged with the stage.
inline Certificate certify_hyperbolic(const tri::Triangulation& t, gluing::NewtonOptions newton = {}) {
  const auto diags = tri::validate(t);
  if (!diags.empty()) throw CertifyError("validate", diags.front().message);

  gluing::GluingSystem sys;
  try {
    sys = gluing::build_equations(t);
  } catch (const Error& e) {
    throw CertifyError("equations", e.what());
  }

  gluing::NewtonResult solved;
  try {
    solved = gluing::newton_solve(sys, t.shape_hints(), newton);
  } catch (const Error& e) {
    throw CertifyError("solve", e.what());
  }

  Certificate last;
  for (const double r : kRadiusLadder) {
    try {
      last = krawczyk_test(sys, solved.shapes, r, t.name);
    } catch (const CertifyError&) {
      throw;
    } catch (const Error& e) {
      throw CertifyError("krawczyk", e.what());
    }
    if (last.valid()) return last;
  }
  return last;
}

}  // namespace bandforge::verified
