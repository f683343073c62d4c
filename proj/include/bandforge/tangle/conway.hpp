#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "bandforge/error.hpp"
#include "bandforge/modular.hpp"
#include "bandforge/tangle/fraction.hpp"

namespace bandforge::tangle {

/// Conway form C(a_0, ..., a_k) of a rational tangle / two-bridge link.
///
/// Entries are nonzero and the list is nonempty. Evaluation nests to the
/// right: a_0 + 1/(a_1 + 1/(... + 1/a_k)).
class ConwayForm {
 public:
  explicit ConwayForm(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("ConwayForm: empty entry list");
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] == 0)
        throw DomainError("ConwayForm: entry " + std::to_string(i) + " is zero");
  }
  ConwayForm(std::initializer_list<std::int64_t> entries)
      : ConwayForm(std::vector<std::int64_t>(entries)) {}

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const ConwayForm&, const ConwayForm&) = default;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const ConwayForm& cf) {
    return os << "C(" << cf.str() << ")";
  }

 private:
  std::vector<std::int64_t> entries_;
};

/// Evaluates the continued fraction right to left in exact arithmetic.
/// Intermediate zero sums make the next reciprocal the formal value 1/0,
/// which is carried projectively: a + 1/(p/q) = (a p + q)/p.
inline Fraction eval_conway(const ConwayForm& cf) {
  const auto& a = cf.entries();
  BigInt num = a.back();
  BigInt den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    BigInt next = BigInt(a[i]) * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return Fraction(std::move(num), std::move(den));
}

/// Greedy continued fraction of p/q with q first reduced into (0, p).
/// All entries of the result are positive.
inline ConwayForm conway_expand(std::int64_t p, std::int64_t q) {
  if (p < 2) throw DomainError("conway_expand: p must be at least 2");
  if (std::gcd(p, q) != 1) throw DomainError("conway_expand: p and q are not coprime");
  std::int64_t num = p;
  std::int64_t den = mod_floor(q, p);
  std::vector<std::int64_t> out;
  while (den != 0) {
    out.push_back(num / den);
    const std::int64_t rem = num % den;
    num = den;
    den = rem;
  }
  return ConwayForm(std::move(out));
}

/// True for the forms C(a_0, ..., a_k, ±2, -a_k, ..., -a_0), including the
/// degenerate one-entry forms C(±2).
inline bool is_cosmetic_palindrome(const ConwayForm& cf) {
  const auto& a = cf.entries();
  if (a.size() % 2 == 0) return false;
  const std::size_t mid = a.size() / 2;
  if (a[mid] != 2 && a[mid] != -2) return false;
  for (std::size_t i = 0; i < mid; ++i)
    if (a[i] != -a[a.size() - 1 - i]) return false;
  return true;
}

/// The banding partner: same form with the middle ±2 negated.
inline ConwayForm cosmetic_band_partner(const ConwayForm& cf) {
  if (!is_cosmetic_palindrome(cf))
    throw DomainError("cosmetic_band_partner: " + cf.str() +
                      " is not of the form (a_0..a_k, ±2, -a_k..-a_0)");
  auto entries = cf.entries();
  entries[entries.size() / 2] = -entries[entries.size() / 2];
  return ConwayForm(std::move(entries));
}

}  // namespace bandforge::tangle
