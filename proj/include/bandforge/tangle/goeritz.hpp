#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "bandforge/error.hpp"
#include "bandforge/tangle/diagram.hpp"

namespace bandforge::tangle {

using BigRational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Regions of a planar diagram with a checkerboard coloring.
/// Corner (c, s) is the region between slots s and s+1 of crossing c.
struct RegionMap {
  std::vector<int> corner_region;  // 4 * crossing + s -> region
  std::vector<int> color;          // region -> 0 or 1
  int region_count = 0;

  int region(int c, int s) const { return corner_region[4 * c + (s % 4)]; }
};

inline RegionMap regions(const PlanarDiagram& d) {
  RegionMap out;
  out.corner_region.assign(4 * d.size(), -1);
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      if (out.corner_region[4 * c + s] >= 0) continue;
      const int id = out.region_count++;
      Slot at{c, s};
      while (out.corner_region[4 * at.crossing + at.slot] < 0) {
        out.corner_region[4 * at.crossing + at.slot] = id;
        at = d.crossing(at.crossing).link[(at.slot + 1) % 4];
      }
    }
  if (out.region_count != d.size() + 2)
    throw DomainError("regions: diagram is not a connected planar projection");

  // Adjacent corners at a crossing lie in regions of opposite color.
  std::vector<std::vector<int>> opposite(out.region_count);
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      opposite[out.region(c, s)].push_back(out.region(c, s + 1));
    }
  out.color.assign(out.region_count, -1);
  std::queue<int> todo;
  out.color[0] = 0;
  todo.push(0);
  while (!todo.empty()) {
    const int r = todo.front();
    todo.pop();
    for (const int o : opposite[r]) {
      if (out.color[o] < 0) {
        out.color[o] = 1 - out.color[r];
        todo.push(o);
      } else if (out.color[o] == out.color[r]) {
        throw DomainError("regions: checkerboard coloring failed");
      }
    }
  }
  return out;
}

/// Goeritz matrix on the regions of color `white` (one region dropped) and
/// the Gordon–Litherland correction term mu = sum of eta over type II
/// crossings. Signature of the link is signature(G) - mu.
struct GoeritzData {
  IntMatrix matrix;
  std::int64_t correction = 0;
};

inline GoeritzData goeritz(const PlanarDiagram& d, const RegionMap& rm, int white) {
  std::vector<int> index(rm.region_count, -1);
  int n = 0;
  for (int r = 0; r < rm.region_count; ++r)
    if (rm.color[r] == white) index[r] = n++;
  IntMatrix full(n, std::vector<std::int64_t>(n, 0));
  GoeritzData out;
  for (int c = 0; c < d.size(); ++c) {
    const int s = rm.color[rm.region(c, 0)] == white ? 0 : 1;
    const int a = index[rm.region(c, s)];
    const int b = index[rm.region(c, s + 2)];
    const Crossing& x = d.crossing(c);
    // eta: +1 when the strand on the clockwise side of the white corner is
    // under. With this choice positive crossings push the signature down.
    const int eta = x.is_over(s) ? -1 : 1;
    if (a != b) {
      full[a][b] -= eta;
      full[b][a] -= eta;
      full[a][a] += eta;
      full[b][b] += eta;
    }
    // Type II: both strands cross the black band in the same direction.
    if (d.incoming(c, s) == d.incoming(c, (s + 3) % 4)) out.correction += eta;
  }
  out.matrix.assign(n - 1, std::vector<std::int64_t>(n - 1, 0));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) out.matrix[i][j] = full[i][j];
  return out;
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals.
inline int matrix_signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("matrix_signature: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw DomainError("matrix_signature: matrix is not symmetric");
      a[i][j] = m[i][j];
    }
  }
  auto add_row_col = [&](std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += a[src][j];
    for (std::size_t i = 0; i < n; ++i) a[i][dst] += a[i][src];
  };
  int sig = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && a[i][i] != 0) piv = i;
    if (piv == n) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal a_ij
      // gives a_ii + 2a_ij + a_jj != 0 after adding row/column j to i.
      for (std::size_t i = 0; i < n && piv == n; ++i)
        for (std::size_t j = 0; j < n && piv == n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            add_row_col(i, j);
            piv = i;
          }
      if (piv == n) break;  // remaining block is zero
    }
    done[piv] = true;
    const BigRational p = a[piv][piv];
    sig += p > 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][piv] == 0) continue;
      const BigRational f = a[i][piv] / p;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[piv][j];
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) a[i][piv] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) a[piv][j] = 0;
  }
  return sig;
}

/// Gordon–Litherland signature of the diagram computed from the checkerboard
/// surface of color `white`. Both colors give the same value.
inline int diagram_signature(const PlanarDiagram& d, int white) {
  const RegionMap rm = regions(d);
  const GoeritzData g = goeritz(d, rm, white);
  return matrix_signature(g.matrix) - static_cast<int>(g.correction);
}

/// Same, using whichever color yields the smaller Goeritz matrix.
inline int diagram_signature(const PlanarDiagram& d) {
  const RegionMap rm = regions(d);
  int white_count = 0;
  for (const int c : rm.color) white_count += c == 0 ? 1 : 0;
  const int white = 2 * white_count <= rm.region_count ? 0 : 1;
  const GoeritzData g = goeritz(d, rm, white);
  return matrix_signature(g.matrix) - static_cast<int>(g.correction);
}

}  // namespace bandforge::tangle
