#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bandforge/error.hpp"
#include "bandforge/tangle/conway.hpp"

namespace bandforge::tangle {

/// One end of an arc: slot `slot` (0..3, counterclockwise) of crossing `crossing`.
struct Slot {
  int crossing = -1;
  int slot = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Crossing of a planar diagram. Slots are listed counterclockwise; slots
/// {0,2} carry one strand and {1,3} the other. `link[s]` is the slot at the
/// far end of the arc leaving slot s.
struct Crossing {
  std::array<Slot, 4> link{};
  bool odd_strand_over = true;

  bool is_over(int slot) const { return ((slot % 2) != 0) == odd_strand_over; }
};

/// Closed planar diagram given by its crossings and their rotation system.
/// Every component is assumed to pass through at least one crossing.
class PlanarDiagram {
 public:
  explicit PlanarDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
    for (std::size_t c = 0; c < crossings_.size(); ++c)
      for (int s = 0; s < 4; ++s) {
        const Slot far = crossings_[c].link[s];
        if (far.crossing < 0 || far.crossing >= size())
          throw DomainError("PlanarDiagram: dangling arc");
        const Slot back = crossings_[far.crossing].link[far.slot];
        if (back.crossing != static_cast<int>(c) || back.slot != s)
          throw DomainError("PlanarDiagram: arc endpoints disagree");
      }
    orient();
  }

  int size() const { return static_cast<int>(crossings_.size()); }
  const Crossing& crossing(int c) const { return crossings_[c]; }
  int component_count() const { return components_; }

  // True when the oriented strand enters crossing c through slot s.
  bool incoming(int c, int s) const { return incoming_[4 * c + s]; }

  // +1 / -1 by the right-hand rule.
  int sign(int c) const {
    const int under_in = incoming(c, 0) ? 0 : 2;
    const int over_in = incoming(c, 1) ? 1 : 3;
    const int under = crossings_[c].is_over(0) ? over_in : under_in;
    const int over = crossings_[c].is_over(0) ? under_in : over_in;
    // Over strand arrives one quarter turn counterclockwise from the under
    // strand's entry: left-handed.
    return (over - under + 4) % 4 == 1 ? -1 : 1;
  }

  int writhe() const {
    int w = 0;
    for (int c = 0; c < size(); ++c) w += sign(c);
    return w;
  }

 private:
  void orient() {
    incoming_.assign(4 * crossings_.size(), false);
    std::vector<bool> seen(4 * crossings_.size(), false);
    components_ = 0;
    for (int c = 0; c < size(); ++c)
      for (int s = 0; s < 4; ++s) {
        if (seen[4 * c + s]) continue;
        ++components_;
        Slot at{c, s};
        while (!seen[4 * at.crossing + at.slot]) {
          const Slot out{at.crossing, (at.slot + 2) % 4};
          seen[4 * at.crossing + at.slot] = true;
          seen[4 * out.crossing + out.slot] = true;
          incoming_[4 * at.crossing + at.slot] = true;
          at = crossings_[out.crossing].link[out.slot];
        }
      }
  }

  std::vector<Crossing> crossings_;
  std::vector<bool> incoming_;
  int components_ = 0;
};

/// Rational tangle diagram under construction, with its four boundary ends.
class TangleBuilder {
 public:
  // Adds one horizontal half twist to the east ends. Positive twists add
  // +1 to the tangle's fraction.
  void twist(bool positive) {
    const int c = static_cast<int>(crossings_.size());
    crossings_.push_back(Crossing{{}, positive});
    if (c == 0) {
      nw_ = {c, 3};
      sw_ = {c, 0};
    } else {
      join(ne_, {c, 3});
      join(se_, {c, 0});
    }
    ne_ = {c, 2};
    se_ = {c, 1};
  }

  // Quarter turn counterclockwise: fraction x becomes -1/x.
  void rotate() {
    const Slot nw = nw_, ne = ne_, se = se_, sw = sw_;
    nw_ = ne;
    sw_ = nw;
    se_ = sw;
    ne_ = se;
  }

  // Switches every crossing: fraction x becomes -x.
  void mirror() {
    for (auto& c : crossings_) c.odd_strand_over = !c.odd_strand_over;
  }

  // Numerator closure N(T): joins NW to NE and SW to SE.
  PlanarDiagram numerator_closure() && {
    if (crossings_.empty()) throw DomainError("TangleBuilder: empty tangle");
    join(nw_, ne_);
    join(sw_, se_);
    return PlanarDiagram(std::move(crossings_));
  }

 private:
  void join(Slot a, Slot b) {
    crossings_[a.crossing].link[a.slot] = b;
    crossings_[b.crossing].link[b.slot] = a;
  }

  std::vector<Crossing> crossings_;
  Slot nw_, ne_, se_, sw_;
};

/// Alternating diagram of the two-bridge link N(C(a_0, ..., a_k)): the
/// integer tangle a_k, then repeatedly T -> a_i + 1/T with 1/T realized as
/// mirror(rotate(T)).
inline PlanarDiagram two_bridge_diagram(const ConwayForm& cf) {
  TangleBuilder tangle;
  const auto& a = cf.entries();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (i + 1 != a.size()) {
      tangle.rotate();
      tangle.mirror();
    }
    const std::int64_t count = a[i] < 0 ? -a[i] : a[i];
    for (std::int64_t t = 0; t < count; ++t) tangle.twist(a[i] > 0);
  }
  return std::move(tangle).numerator_closure();
}

}  // namespace bandforge::tangle
