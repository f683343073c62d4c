#pragma once

#include <cstdint>
#include <numeric>

#include "bandforge/error.hpp"

namespace bandforge {

// Representative of a in [0, m). m must be positive.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const __int128 prod = static_cast<__int128>(mod_floor(a, m)) * mod_floor(b, m);
  return static_cast<std::int64_t>(prod % m);
}

constexpr bool congruent(std::int64_t a, std::int64_t b, std::int64_t m) {
  return mod_floor(a, m) == mod_floor(b, m);
}

// Inverse of a modulo m via the extended Euclidean algorithm.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw DomainError("mod_inverse: argument is not a unit");
  return mod_floor(old_s, m);
}

constexpr std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw OverflowError("checked_abs: INT64_MIN has no positive counterpart");
  return a < 0 ? -a : a;
}

}  // namespace bandforge
