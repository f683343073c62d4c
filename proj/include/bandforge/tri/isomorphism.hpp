#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "bandforge/tri/permutation.hpp"
#include "bandforge/tri/triangulation.hpp"

namespace bandforge::tri {

/// Combinatorial isomorphism a -> b: tetrahedron i of a goes to tet_map[i]
/// of b with vertex relabeling vertex_map[i].
struct Isomorphism {
  std::vector<int> tet_map;
  std::vector<Permutation> vertex_map;
};

namespace detail {

// Propagates the anchor (a:0 -> b:target, perm) along face gluings.
inline std::optional<Isomorphism> extend_isomorphism(const Triangulation& a, const Triangulation& b, int target,
                                                     const Permutation& perm) {
  const int n = a.tet_count();
  Isomorphism iso{std::vector<int>(n, -1), std::vector<Permutation>(n)};
  std::vector<int> used(n, -1);  // b tet -> a tet
  iso.tet_map[0] = target;
  iso.vertex_map[0] = perm;
  used[target] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int i = todo.front();
    todo.pop();
    const int bi = iso.tet_map[i];
    const Permutation& pi = iso.vertex_map[i];
    for (int f = 0; f < 4; ++f) {
      const int nbr = a.tets[i].neighbors[f];
      const Permutation& ga = a.tets[i].gluings[f];
      const int bf = pi[f];
      const int bnbr = b.tets[bi].neighbors[bf];
      const Permutation& gb = b.tets[bi].gluings[bf];
      // Vertex map forced on the neighbor: gb ∘ pi ∘ ga⁻¹.
      const Permutation forced = gb * pi * ga.inverse();
      if (iso.tet_map[nbr] < 0) {
        if (used[bnbr] >= 0) return std::nullopt;
        iso.tet_map[nbr] = bnbr;
        iso.vertex_map[nbr] = forced;
        used[bnbr] = nbr;
        todo.push(nbr);
      } else if (iso.tet_map[nbr] != bnbr || !(iso.vertex_map[nbr] == forced)) {
        return std::nullopt;
      }
    }
  }
  for (const int m : iso.tet_map)
    if (m < 0) return std::nullopt;  // a is disconnected
  return iso;
}

}  // namespace detail

/// Finds a combinatorial isomorphism by anchoring tetrahedron 0 of `a` at
/// every (tetrahedron, vertex permutation) of `b` and propagating. Only face
/// pairings are compared; cusp and peripheral data are ignored.
/// Both inputs must be valid (see validate()).
inline std::optional<Isomorphism> find_isomorphism(const Triangulation& a, const Triangulation& b) {
  if (a.tet_count() != b.tet_count() || a.tet_count() == 0) return std::nullopt;
  for (int target = 0; target < b.tet_count(); ++target)
    for (const Permutation& perm : Permutation::all())
      if (auto iso = detail::extend_isomorphism(a, b, target, perm)) return iso;
  return std::nullopt;
}

inline bool combinatorial_isomorphic(const Triangulation& a, const Triangulation& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace bandforge::tri
