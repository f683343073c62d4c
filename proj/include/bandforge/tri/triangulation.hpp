#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bandforge/tri/permutation.hpp"

namespace bandforge::tri {

enum class CuspTopology { torus, klein };

enum class SolutionType {
  not_attempted,
  geometric_solution,
  nongeometric_solution,
  flat_solution,
  degenerate_solution,
  other_solution,
  no_solution,
  externally_computed,
};

enum class Orientability { oriented, nonorientable, unknown };

inline constexpr std::array<std::string_view, 8> kSolutionTypeNames{
    "not_attempted",       "geometric_solution", "nongeometric_solution", "flat_solution",
    "degenerate_solution", "other_solution",     "no_solution",           "externally_computed"};

inline constexpr std::array<std::string_view, 3> kOrientabilityNames{
    "oriented_manifold", "nonorientable_manifold", "unknown_orientability"};

inline std::string_view to_string(SolutionType t) { return kSolutionTypeNames[static_cast<int>(t)]; }
inline std::string_view to_string(Orientability o) { return kOrientabilityNames[static_cast<int>(o)]; }
inline std::string_view to_string(CuspTopology t) { return t == CuspTopology::torus ? "torus" : "Klein"; }

/// Cusp record: (0, 0) means the cusp is left complete, anything else is a
/// Dehn filling m·meridian + l·longitude.
struct CuspInfo {
  CuspTopology topology = CuspTopology::torus;
  double filling_m = 0.0;
  double filling_l = 0.0;

  bool is_complete() const { return filling_m == 0.0 && filling_l == 0.0; }
  friend bool operator==(const CuspInfo&, const CuspInfo&) = default;
};

/// Peripheral curve rows: meridian and longitude, each on the right- and
/// left-handed sheet of the cusp cover.
enum PeripheralRow : int {
  kMeridianRight = 0,
  kMeridianLeft = 1,
  kLongitudeRight = 2,
  kLongitudeLeft = 3,
};

struct Tetrahedron {
  std::array<int, 4> neighbors{};
  std::array<Permutation, 4> gluings{};
  std::array<int, 4> vertex_cusp{};
  // peripheral[row][4 * vertex + face]: signed intersection of the curve with
  // the side `face` of the cusp triangle at `vertex`.
  std::array<std::array<int, 16>, 4> peripheral{};
  std::complex<double> shape_hint;

  int curve(int row, int vertex, int face) const { return peripheral[row][4 * vertex + face]; }

  friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;
};

/// In-memory form of a SnapPea-style .tri file.
struct Triangulation {
  std::string name;
  SolutionType solution_type = SolutionType::not_attempted;
  std::optional<double> volume_hint;
  Orientability orientability = Orientability::oriented;
  // Chern–Simons line kept verbatim ("CS_unknown" or "CS_known <value>").
  std::string cs_flag = "CS_unknown";
  int cusp_count = 0;
  int fake_cusp_count = 0;
  std::vector<CuspInfo> cusps;
  std::vector<Tetrahedron> tets;
  // Leading "% Triangulation" marker line, written by newer SnapPy versions.
  bool percent_header = false;

  int tet_count() const { return static_cast<int>(tets.size()); }

  std::vector<std::complex<double>> shape_hints() const {
    std::vector<std::complex<double>> out;
    out.reserve(tets.size());
    for (const auto& t : tets) out.push_back(t.shape_hint);
    return out;
  }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

}  // namespace bandforge::tri
