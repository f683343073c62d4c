#pragma once

#include <cstdint>

#include "bandforge/error.hpp"
#include "bandforge/tangle/conway.hpp"
#include "bandforge/tangle/diagram.hpp"
#include "bandforge/tangle/goeritz.hpp"
#include "bandforge/tangle/two_bridge.hpp"

namespace bandforge::tangle {

/// Knot signature, normalized so that positive-twist torus knots are
/// negative: sigma(S(2k+1, 1)) = -2k.
///
/// Computed from the Goeritz form of the alternating diagram of the
/// positive continued fraction of p/q. Cost grows with the sum of the
/// continued-fraction entries.
inline int signature_two_bridge(const TwoBridge& tb) {
  if (!tb.is_knot())
    throw DomainError("signature_two_bridge: " + tb.str() + " is a two-component link");
  const PlanarDiagram d = two_bridge_diagram(conway_expand(tb.p(), tb.q()));
  return diagram_signature(d);
}

/// A 4-move changes the signature by at most 4, so a larger gap rules out a
/// single 4-move between the two knots.
inline bool four_move_signature_obstruction(const TwoBridge& a, const TwoBridge& b) {
  const int gap = signature_two_bridge(a) - signature_two_bridge(b);
  return gap > 4 || gap < -4;
}

}  // namespace bandforge::tangle
