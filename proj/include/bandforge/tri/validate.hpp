#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "bandforge/tri/triangulation.hpp"

namespace bandforge::tri {

enum class DiagnosticKind {
  empty,             // no tetrahedra
  cusp_count,        // cusp list length disagrees with the header
  neighbor_range,    // neighbor index outside [0, tet_count)
  involution,        // face pairing is not an involution
  cusp_range,        // vertex cusp index outside [0, cusps)
  cusp_mismatch,     // glued vertices sit on different cusps
  filling,           // nonzero filling that is not a primitive integer pair
  peripheral_sheet,  // left-handed sheet used on an oriented manifold
  peripheral_flow,   // curve intersections disagree across a glued face
};

inline std::string_view to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::empty: return "empty";
    case DiagnosticKind::cusp_count: return "cusp_count";
    case DiagnosticKind::neighbor_range: return "neighbor_range";
    case DiagnosticKind::involution: return "involution";
    case DiagnosticKind::cusp_range: return "cusp_range";
    case DiagnosticKind::cusp_mismatch: return "cusp_mismatch";
    case DiagnosticKind::filling: return "filling";
    case DiagnosticKind::peripheral_sheet: return "peripheral_sheet";
    case DiagnosticKind::peripheral_flow: return "peripheral_flow";
  }
  return "unknown";
}

struct Diagnostic {
  DiagnosticKind kind;
  int tet = -1;   // -1 when the problem is global
  int face = -1;  // -1 when not tied to a face
  std::string message;
};

/// Integral within 1e-9, for filling coefficients stored as reals.
inline bool near_integer(double x) { return std::abs(x - std::round(x)) <= 1e-9; }

inline bool valid_filling(const CuspInfo& c) {
  if (c.is_complete()) return true;
  if (!near_integer(c.filling_m) || !near_integer(c.filling_l)) return false;
  const auto m = static_cast<long long>(std::llround(c.filling_m));
  const auto l = static_cast<long long>(std::llround(c.filling_l));
  return std::gcd(m, l) == 1;
}

/// Checks every structural invariant; an empty result means the
/// triangulation is well formed. Checks that depend on earlier ones (e.g.
/// the involution test needs neighbors in range) are skipped per face.
inline std::vector<Diagnostic> validate(const Triangulation& t) {
  std::vector<Diagnostic> out;
  auto where = [](int tet, int face) {
    std::string s = "tetrahedron " + std::to_string(tet);
    if (face >= 0) s += " face " + std::to_string(face);
    return s;
  };
  const int n = t.tet_count();
  const int cusps = static_cast<int>(t.cusps.size());
  if (n == 0) out.push_back({DiagnosticKind::empty, -1, -1, "triangulation has no tetrahedra"});
  if (cusps != t.cusp_count + t.fake_cusp_count)
    out.push_back({DiagnosticKind::cusp_count, -1, -1,
                   "header announces " + std::to_string(t.cusp_count + t.fake_cusp_count) + " cusps, found " +
                       std::to_string(cusps)});
  for (int c = 0; c < cusps; ++c)
    if (!valid_filling(t.cusps[c]))
      out.push_back({DiagnosticKind::filling, -1, -1,
                     "cusp " + std::to_string(c) + " filling is not a primitive integer pair"});

  for (int i = 0; i < n; ++i) {
    const Tetrahedron& tet = t.tets[i];
    for (int v = 0; v < 4; ++v)
      if (tet.vertex_cusp[v] < 0 || tet.vertex_cusp[v] >= cusps)
        out.push_back({DiagnosticKind::cusp_range, i, -1,
                       where(i, -1) + " vertex " + std::to_string(v) + " cusp index " +
                           std::to_string(tet.vertex_cusp[v]) + " out of range [0, " + std::to_string(cusps) +
                           ")"});
    if (t.orientability == Orientability::oriented)
      for (const int row : {kMeridianLeft, kLongitudeLeft})
        for (const int x : tet.peripheral[row])
          if (x != 0) {
            out.push_back({DiagnosticKind::peripheral_sheet, i, -1,
                           where(i, -1) + " has left-handed peripheral data on an oriented manifold"});
            break;
          }

    for (int f = 0; f < 4; ++f) {
      const int nbr = tet.neighbors[f];
      if (nbr < 0 || nbr >= n) {
        out.push_back({DiagnosticKind::neighbor_range, i, f,
                       where(i, f) + " neighbor " + std::to_string(nbr) + " out of range [0, " +
                           std::to_string(n) + ")"});
        continue;
      }
      const Permutation& g = tet.gluings[f];
      const Tetrahedron& other = t.tets[nbr];
      const int back_face = g[f];
      if (other.neighbors[back_face] != i || !(other.gluings[back_face] == g.inverse())) {
        out.push_back({DiagnosticKind::involution, i, f,
                       where(i, f) + " is glued to " + where(nbr, back_face) + " via " + g.str() +
                           " but the reverse gluing is not its inverse"});
        continue;
      }
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const int a = tet.vertex_cusp[v];
        const int b = other.vertex_cusp[g[v]];
        if (a != b && a >= 0 && a < cusps && b >= 0 && b < cusps) {
          out.push_back({DiagnosticKind::cusp_mismatch, i, f,
                         where(i, f) + " vertex " + std::to_string(v) + " lies on cusp " + std::to_string(a) +
                             " but its image lies on cusp " + std::to_string(b)});
          break;
        }
      }
      // A curve leaving through a face enters the neighbor through the
      // matching face. Odd gluings keep the sheet, even ones swap it.
      const bool keep_sheet = g.sign() < 0;
      bool flow_ok = true;
      for (int row = 0; row < 4 && flow_ok; ++row) {
        const int other_row = keep_sheet ? row : (row ^ 1);
        for (int v = 0; v < 4 && flow_ok; ++v) {
          if (v == f) continue;
          if (tet.curve(row, v, f) != -other.curve(other_row, g[v], g[f])) flow_ok = false;
        }
      }
      if (!flow_ok)
        out.push_back({DiagnosticKind::peripheral_flow, i, f,
                       where(i, f) + " peripheral curve intersections do not match across the gluing"});
    }
  }
  return out;
}

}  // namespace bandforge::tri
