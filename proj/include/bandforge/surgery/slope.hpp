#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "bandforge/error.hpp"
#include "bandforge/modular.hpp"

namespace bandforge::surgery {

/// Surgery slope p/q on a torus boundary, as a primitive pair up to overall
/// sign. Stored with q > 0, or as (1, 0) for the meridian.
class Slope {
 public:
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (p == 0 && q == 0) throw DomainError("Slope: (0,0) is not a slope");
    if (std::gcd(p, q) != 1)
      throw DomainError("Slope: " + std::to_string(p) + "/" + std::to_string(q) + " is not primitive");
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
      p_ = -p_;
      q_ = -q_;
    }
  }

  static Slope meridian() { return Slope(1, 0); }
  static Slope integral(std::int64_t n) { return Slope(n, 1); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const Slope&, const Slope&) = default;

  std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }
  friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Minimal geometric intersection number |p q' - p' q|.
inline std::int64_t slope_distance(const Slope& a, const Slope& b) {
  const __int128 d = static_cast<__int128>(a.p()) * b.q() - static_cast<__int128>(b.p()) * a.q();
  const __int128 ad = d < 0 ? -d : d;
  if (ad > INT64_MAX) throw OverflowError("slope_distance: result exceeds 64 bits");
  return static_cast<std::int64_t>(ad);
}

/// Distance between p/q and -p/q; always 2|pq|. Both coordinates must be
/// nonzero (0/1 and 1/0 are their own negatives).
inline std::int64_t amphicheiral_pair_distance(const Slope& s) {
  if (s.p() == 0 || s.q() == 0)
    throw DomainError("amphicheiral_pair_distance: slope " + s.str() + " needs |p|, |q| != 0");
  const std::int64_t d = slope_distance(s, Slope(-s.p(), s.q()));
  const __int128 expect = 2 * static_cast<__int128>(checked_abs(s.p())) * s.q();
  if (d != expect) throw Error("amphicheiral_pair_distance: distance disagrees with 2|pq|");
  return d;
}

}  // namespace bandforge::surgery
