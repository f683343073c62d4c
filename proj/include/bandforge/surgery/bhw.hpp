#pragma once

#include <vector>

#include "bandforge/check.hpp"
#include "bandforge/surgery/lens.hpp"
#include "bandforge/surgery/slope.hpp"
#include "bandforge/tangle/two_bridge.hpp"

namespace bandforge::surgery {

/// Numerology of the Bleiler–Hodgson–Weeks example: integral surgeries 19
/// and 18 on a knot in S^2 x S^1 give L(49,-19) and its mirror L(49,-18),
/// and the quotient knot 9_27 is S(49,-19).
inline std::vector<Check> bhw_example_report() {
  std::vector<Check> out;

  const LensSpace l19(49, -19);
  out.push_back({"normalize L(49,-19) = L(49,30)", l19 == LensSpace(49, 30), l19.str()});

  const LensSpace mirror = lens_mirror(l19);
  const LensSpace l18(49, -18);
  out.push_back({"mirror of L(49,-19) is L(49,-18) (orientation preserving)",
                 mirror == LensSpace(49, 19) && l18 == LensSpace(49, 31) &&
                     lens_equivalent(mirror, l18, /*oriented=*/true),
                 mirror.str() + " vs " + l18.str()});

  const std::int64_t d = slope_distance(Slope::integral(19), Slope::integral(18));
  out.push_back({"slope distance of 19 and 18 is 1", d == 1, std::to_string(d)});

  const tangle::TwoBridge k927 = tangle::normalize_two_bridge(49, -19);
  out.push_back({"9_27 = S(49,-19) normalizes to S(49,30)", k927 == tangle::TwoBridge(49, 30), k927.str()});
  return out;
}

}  // namespace bandforge::surgery
