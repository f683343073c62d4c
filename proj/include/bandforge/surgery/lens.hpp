#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "bandforge/error.hpp"
#include "bandforge/modular.hpp"
#include "bandforge/tangle/two_bridge.hpp"

namespace bandforge::surgery {

/// Lens space L(p, q). Negative q is accepted and reduced into (0, p);
/// L(1, 0) is S^3 and L(0, 1) is S^2 x S^1.
class LensSpace {
 public:
  LensSpace(std::int64_t p, std::int64_t q) : p_(p) {
    if (p < 0) throw DomainError("LensSpace: p must be nonnegative");
    if (std::gcd(p, q) != 1)
      throw DomainError("LensSpace: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    q_ = p == 0 ? 1 : mod_floor(q, p);
  }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

  std::string str() const { return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const LensSpace& l) { return os << l.str(); }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Classification of lens spaces. Oriented: L(p,q) ≅ L(p,q') preserving
/// orientation iff q' ≡ q^{±1}. Unoriented additionally allows -q^{±1}.
inline bool lens_equivalent(const LensSpace& a, const LensSpace& b, bool oriented) {
  if (a.p() != b.p()) return false;
  const std::int64_t p = a.p();
  if (p <= 2) return true;
  const std::int64_t prod = mul_mod(a.q(), b.q(), p);
  if (a.q() == b.q() || prod == 1) return true;
  if (oriented) return false;
  return congruent(a.q(), -b.q(), p) || prod == p - 1;
}

inline LensSpace lens_mirror(const LensSpace& l) {
  if (l.p() == 0) return l;
  return LensSpace(l.p(), l.p() - l.q());
}

/// The double cover of S^3 branched along S(p, q) is L(p, q).
inline LensSpace double_branched_cover(const tangle::TwoBridge& tb) { return LensSpace(tb.p(), tb.q()); }

/// Members of the family L(2m², 2mn - 1) with gcd(m, n) = 1 and 2n <= m,
/// paired with the two-bridge link they cover.
inline std::pair<LensSpace, tangle::TwoBridge> matignon_family(std::int64_t m, std::int64_t n) {
  if (m <= 0 || n <= 0) throw DomainError("matignon_family: m and n must be positive");
  if (std::gcd(m, n) != 1) throw DomainError("matignon_family: m and n are not coprime");
  if (2 * n > m) throw DomainError("matignon_family: requires 2n <= m");
  const std::int64_t p = 2 * m * m;
  const std::int64_t q = 2 * m * n - 1;
  const LensSpace lens(p, q);
  const tangle::TwoBridge link(p, q);
  if (!(double_branched_cover(link) == lens))
    throw Error("matignon_family: branched cover of " + link.str() + " is not " + lens.str());
  if (!tangle::is_unlinking_number_one(link))
    throw Error("matignon_family: " + link.str() + " is not in Kohn's list");
  return {lens, link};
}

}  // namespace bandforge::surgery
