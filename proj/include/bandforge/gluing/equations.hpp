#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "bandforge/error.hpp"
#include "bandforge/gluing/edge_classes.hpp"
#include "bandforge/tri/triangulation.hpp"
#include "bandforge/tri/validate.hpp"

namespace bandforge::gluing {

using Complex = std::complex<double>;
using ShapeVector = std::vector<Complex>;

inline bool is_geometric(const ShapeVector& z) {
  return std::all_of(z.begin(), z.end(), [](const Complex& w) { return w.imag() > 0; });
}

enum class RowKind { edge, cusp_complete, cusp_filled };

inline const char* to_string(RowKind k) {
  switch (k) {
    case RowKind::edge: return "edge";
    case RowKind::cusp_complete: return "cusp_complete";
    case RowKind::cusp_filled: return "cusp_filled";
  }
  return "unknown";
}

/// One gluing equation in logarithmic form:
///
///   sum_j log_z[j]·log z_j + log_one_minus_z[j]·log(1 - z_j) + branch·πi = rhs·πi
///
/// with principal logarithms. `rhs` is 2 for edge and filled-cusp rows and
/// 0 for complete cusps; `branch` collects the iπ constants that appear when
/// log z'' is rewritten as log(1-z) - log z + iπ, which holds exactly on the
/// upper half-plane.
struct EquationRow {
  RowKind kind = RowKind::edge;
  int source = 0;  // edge class or cusp index
  std::vector<int> log_z;
  std::vector<int> log_one_minus_z;
  int rhs = 2;
  int branch = 0;
  int filling_m = 0;
  int filling_l = 0;
};

/// Edge rows first (in edge_classes order), then one row per cusp.
struct GluingSystem {
  int tet_count = 0;
  std::vector<EquationRow> rows;

  int edge_row_count() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const EquationRow& r) { return r.kind == RowKind::edge; }));
  }
};

namespace detail {

// Accumulates n·log(parameter) into a row.
inline void add_param(EquationRow& row, int tet, ShapeParam p, int n) {
  switch (p) {
    case ShapeParam::z:
      row.log_z[tet] += n;
      break;
    case ShapeParam::z_prime:  // log z' = -log(1-z)
      row.log_one_minus_z[tet] -= n;
      break;
    case ShapeParam::z_double_prime:  // log z'' = log(1-z) - log z + iπ
      row.log_one_minus_z[tet] += n;
      row.log_z[tet] -= n;
      row.branch += n;
      break;
  }
}

// Face opposite the corner reached by turning counterclockwise (seen from
// the cusp) from face f around vertex v.
inline constexpr int kRemainingFace[4][4] = {{-1, 2, 3, 1}, {3, -1, 0, 2}, {1, 3, -1, 0}, {2, 0, 1, -1}};

// Strands of a normal curve turning from side `in` to side `out` of a cusp
// triangle, given the signed intersection numbers with each side.
constexpr int flow(int in, int out) {
  if (in < 0) return out > 0 ? std::min(-in, out) : 0;
  return out < 0 ? -std::min(in, -out) : 0;
}

// Log-holonomy of a peripheral curve (meridian or longitude, right-handed
// sheet) on cusp `cusp`, accumulated into `row` with multiplier `scale`.
inline void add_holonomy(EquationRow& row, const tri::Triangulation& t, int cusp, int curve_row, int scale) {
  for (int i = 0; i < t.tet_count(); ++i) {
    const auto& tet = t.tets[i];
    for (int v = 0; v < 4; ++v) {
      if (tet.vertex_cusp[v] != cusp) continue;
      for (int f = 0; f < 4; ++f) {
        if (f == v) continue;
        const int g = kRemainingFace[v][f];
        const int strands = flow(tet.curve(curve_row, v, f), tet.curve(curve_row, v, g));
        if (strands == 0) continue;
        const int w = 6 - v - f - g;  // corner lies on edge (v, w)
        add_param(row, i, edge_param(v, w), scale * strands);
      }
    }
  }
}

}  // namespace detail

/// Thurston gluing equations of an oriented triangulation with torus cusps:
/// one row per edge class and one per cusp (completeness H(meridian) = 0,
/// or m·H(meridian) + l·H(longitude) = 2πi for a filled cusp).
inline GluingSystem build_equations(const tri::Triangulation& t) {
  if (t.orientability == tri::Orientability::nonorientable)
    throw DomainError("build_equations: non-orientable triangulations are not supported");
  const int n = t.tet_count();
  GluingSystem sys;
  sys.tet_count = n;
  auto blank = [n](RowKind kind, int source, int rhs) {
    EquationRow r;
    r.kind = kind;
    r.source = source;
    r.rhs = rhs;
    r.log_z.assign(n, 0);
    r.log_one_minus_z.assign(n, 0);
    return r;
  };

  const auto classes = edge_classes(t);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    EquationRow row = blank(RowKind::edge, static_cast<int>(c), 2);
    for (const auto& inc : classes[c].orbit) detail::add_param(row, inc.tet, inc.param, 1);
    sys.rows.push_back(std::move(row));
  }

  for (std::size_t c = 0; c < t.cusps.size(); ++c) {
    const auto& cusp = t.cusps[c];
    const std::string label = "build_equations: cusp " + std::to_string(c);
    if (cusp.topology != tri::CuspTopology::torus) throw DomainError(label + " is a Klein bottle cusp");
    if (cusp.is_complete()) {
      EquationRow row = blank(RowKind::cusp_complete, static_cast<int>(c), 0);
      detail::add_holonomy(row, t, static_cast<int>(c), tri::kMeridianRight, 1);
      sys.rows.push_back(std::move(row));
      continue;
    }
    if (!tri::valid_filling(cusp)) throw DomainError(label + " has a non-integral or non-primitive filling");
    EquationRow row = blank(RowKind::cusp_filled, static_cast<int>(c), 2);
    row.filling_m = static_cast<int>(std::lround(cusp.filling_m));
    row.filling_l = static_cast<int>(std::lround(cusp.filling_l));
    detail::add_holonomy(row, t, static_cast<int>(c), tri::kMeridianRight, row.filling_m);
    detail::add_holonomy(row, t, static_cast<int>(c), tri::kLongitudeRight, row.filling_l);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

/// Signed residual of one row: LHS - RHS (complex).
inline Complex row_value(const EquationRow& row, const ShapeVector& z) {
  Complex sum = 0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (row.log_z[j] != 0) sum += static_cast<double>(row.log_z[j]) * std::log(z[j]);
    if (row.log_one_minus_z[j] != 0) sum += static_cast<double>(row.log_one_minus_z[j]) * std::log(1.0 - z[j]);
  }
  return sum + Complex(0.0, (row.branch - row.rhs) * std::numbers::pi);
}

/// Per-row residual magnitudes.
inline std::vector<double> residual(const GluingSystem& sys, const ShapeVector& z) {
  if (static_cast<int>(z.size()) != sys.tet_count) throw DomainError("residual: shape vector has the wrong length");
  std::vector<double> out;
  out.reserve(sys.rows.size());
  for (const auto& row : sys.rows) out.push_back(std::abs(row_value(row, z)));
  return out;
}

inline double max_residual(const GluingSystem& sys, const ShapeVector& z) {
  const auto r = residual(sys, z);
  return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

}  // namespace bandforge::gluing
