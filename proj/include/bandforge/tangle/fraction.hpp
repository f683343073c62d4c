#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

#include "bandforge/error.hpp"

namespace bandforge::tangle {

using BigInt = boost::multiprecision::cpp_int;

/// A point of the projective line Q ∪ {1/0}, kept in lowest terms.
///
/// Sign lives in the numerator: the denominator is positive, except for the
/// point at infinity which is stored as (1, 0).
class Fraction {
 public:
  Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit Fraction(long long n) : Fraction(BigInt(n), BigInt(1)) {}

  static Fraction infinity() { return Fraction(BigInt(1), BigInt(0)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  friend bool operator==(const Fraction&, const Fraction&) = default;

  std::string str() const { return num_.str() + "/" + den_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

 private:
  void normalize() {
    if (num_ == 0 && den_ == 0) throw DomainError("Fraction: 0/0 is not a point of Q ∪ {1/0}");
    BigInt g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
    if (den_ < 0 || (den_ == 0 && num_ < 0)) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace bandforge::tangle
