#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "bandforge/error.hpp"
#include "bandforge/modular.hpp"
#include "bandforge/tangle/conway.hpp"
#include "bandforge/tangle/fraction.hpp"

namespace bandforge::tangle {

/// Schubert normal form S(p, q) of a two-bridge knot (p odd) or
/// two-component link (p even). q is stored reduced into (0, p).
class TwoBridge {
 public:
  TwoBridge(std::int64_t p, std::int64_t q) : p_(p) {
    if (p < 2) throw DomainError("TwoBridge: p must be at least 2, got " + std::to_string(p));
    if (std::gcd(p, q) != 1)
      throw DomainError("TwoBridge: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    q_ = mod_floor(q, p);
  }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_knot() const { return p_ % 2 != 0; }

  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;

  std::string str() const { return "S(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const TwoBridge& tb) { return os << tb.str(); }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

inline TwoBridge normalize_two_bridge(std::int64_t p, std::int64_t q) { return TwoBridge(p, q); }

/// S(|p|, sign(p)·q) for the reduced fraction p/q. Fractions with |p| < 2
/// (unknot, unlink, 1/0) are not two-bridge in the Schubert sense.
inline TwoBridge to_two_bridge(const Fraction& f) {
  const BigInt abs_num = boost::multiprecision::abs(f.num());
  if (abs_num < 2) throw DomainError("to_two_bridge: fraction " + f.str() + " has |numerator| < 2");
  if (abs_num > BigInt(INT64_MAX)) throw OverflowError("to_two_bridge: numerator exceeds 64 bits");
  const auto p = static_cast<std::int64_t>(abs_num);
  const BigInt q = f.num() < 0 ? BigInt(-f.den()) : f.den();
  const auto q_mod = static_cast<std::int64_t>(((q % p) + p) % p);
  return TwoBridge(p, q_mod);
}

/// Unoriented Schubert classification, mirror images kept distinct:
/// S(p,q) = S(p,q') iff q' ≡ q^{±1} (mod p).
inline bool two_bridge_equivalent(const TwoBridge& a, const TwoBridge& b) {
  if (a.p() != b.p()) return false;
  return a.q() == b.q() || mul_mod(a.q(), b.q(), a.p()) == 1 % a.p();
}

inline TwoBridge mirror_two_bridge(const TwoBridge& tb) { return TwoBridge(tb.p(), tb.p() - tb.q()); }

/// Witness (n, m) that tb = S(2n², 2nm ± 1) with gcd(n, m) = 1, i.e. that
/// tb is in Kohn's list of unlinking-number-one two-bridge links.
/// m is searched in increasing order, the - sign before the + sign.
inline std::optional<std::pair<std::int64_t, std::int64_t>> is_unlinking_number_one(const TwoBridge& tb) {
  if (tb.is_knot())
    throw DomainError("is_unlinking_number_one: " + tb.str() + " is a knot; a two-component link is required");
  const std::int64_t half = tb.p() / 2;
  auto n = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(half))));
  while (n * n > half) --n;
  while ((n + 1) * (n + 1) <= half) ++n;
  if (n * n != half) return std::nullopt;
  for (std::int64_t m = 0; m <= n; ++m) {
    if (std::gcd(n, m) != 1) continue;
    for (const std::int64_t sign : {-1, 1}) {
      const std::int64_t q = 2 * n * m + sign;
      if (q <= 0 || q >= tb.p()) continue;
      if (two_bridge_equivalent(tb, TwoBridge(tb.p(), q))) return std::make_pair(n, m);
    }
  }
  return std::nullopt;
}

/// The banding that flips the middle ±2 of a cosmetic palindrome carries the
/// link to its mirror image.
inline bool verify_chirally_cosmetic(const ConwayForm& cf) {
  const TwoBridge before = to_two_bridge(eval_conway(cf));
  const TwoBridge after = to_two_bridge(eval_conway(cosmetic_band_partner(cf)));
  return two_bridge_equivalent(after, mirror_two_bridge(before));
}

}  // namespace bandforge::tangle
