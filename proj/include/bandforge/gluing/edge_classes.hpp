#pragma once

#include <array>
#include <numeric>
#include <vector>

#include "bandforge/tri/triangulation.hpp"

namespace bandforge::gluing {

/// Which shape parameter sits on an edge of a positively oriented
/// tetrahedron: z on 01/23, z' = 1/(1-z) on 02/13, z'' = 1 - 1/z on 03/12.
enum class ShapeParam { z = 0, z_prime = 1, z_double_prime = 2 };

constexpr ShapeParam edge_param(int v0, int v1) {
  const int lo = v0 < v1 ? v0 : v1;
  const int hi = v0 < v1 ? v1 : v0;
  if ((lo == 0 && hi == 1) || (lo == 2 && hi == 3)) return ShapeParam::z;
  if ((lo == 0 && hi == 2) || (lo == 1 && hi == 3)) return ShapeParam::z_prime;
  return ShapeParam::z_double_prime;
}

/// The six edges of a tetrahedron as vertex pairs.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int v0, int v1) {
  for (int e = 0; e < 6; ++e)
    if ((kTetEdges[e][0] == v0 && kTetEdges[e][1] == v1) || (kTetEdges[e][0] == v1 && kTetEdges[e][1] == v0))
      return e;
  return -1;
}

struct EdgeIncidence {
  int tet;
  int v0, v1;
  ShapeParam param;
};

struct EdgeClass {
  std::vector<EdgeIncidence> orbit;
};

/// Partitions the 6·T tetrahedron edges into edge classes of the
/// triangulation. Classes are ordered by their first (tet, edge) in
/// lexicographic order; each orbit lists incidences in the same order.
inline std::vector<EdgeClass> edge_classes(const tri::Triangulation& t) {
  const int n = t.tet_count();
  std::vector<int> parent(6 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    const auto& tet = t.tets[i];
    for (int e = 0; e < 6; ++e) {
      const int a = kTetEdges[e][0], b = kTetEdges[e][1];
      for (int f = 0; f < 4; ++f) {
        if (f == a || f == b) continue;
        const auto& g = tet.gluings[f];
        const int other = 6 * tet.neighbors[f] + edge_index(g[a], g[b]);
        const int ra = find(6 * i + e), rb = find(other);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<int> class_of_root(6 * n, -1);
  std::vector<EdgeClass> out;
  for (int k = 0; k < 6 * n; ++k) {
    const int r = find(k);
    if (class_of_root[r] < 0) {
      class_of_root[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    const int a = kTetEdges[k % 6][0], b = kTetEdges[k % 6][1];
    out[class_of_root[r]].orbit.push_back({k / 6, a, b, edge_param(a, b)});
  }
  return out;
}

}  // namespace bandforge::gluing
