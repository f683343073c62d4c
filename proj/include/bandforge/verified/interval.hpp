#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "bandforge/error.hpp"

namespace bandforge::verified {

/// An enclosure of a real or complex quantity came too close to a
/// singularity (division by an interval containing 0, log across the cut).
class DomainViolation : public Error {
 public:
  explicit DomainViolation(const std::string& what) : Error("enclosure touches singularity: " + what) {}
};

namespace rounding {

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// libm transcendental functions are not correctly rounded; glibc documents
// errors of a few ulps, so their endpoints are widened further.
inline constexpr int kTranscendentalUlps = 4;

inline double down_n(double x, int n) {
  for (int i = 0; i < n; ++i) x = down(x);
  return x;
}
inline double up_n(double x, int n) {
  for (int i = 0; i < n; ++i) x = up(x);
  return x;
}

}  // namespace rounding

/// Closed interval [lo, hi] of doubles. Every operation widens its
/// endpoints outward by one ulp (more for transcendental functions), which
/// encloses the exact result without touching the FPU rounding mode.
class RealInterval {
 public:
  constexpr RealInterval() = default;
  RealInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw Error("RealInterval: lo > hi or NaN endpoint");
  }
  static RealInterval point(double x) { return RealInterval(x, x); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * lo_ + 0.5 * hi_; }
  double width() const { return hi_ - lo_; }
  // max |x| over the interval
  double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }
  // min |x| over the interval
  double mig() const { return contains(0.0) ? 0.0 : std::min(std::abs(lo_), std::abs(hi_)); }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool interior_contains(const RealInterval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }

  friend bool operator==(const RealInterval&, const RealInterval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RealInterval& x) {
    return os << "[" << x.lo_ << ", " << x.hi_ << "]";
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline RealInterval operator-(const RealInterval& a) { return RealInterval(-a.hi(), -a.lo()); }

inline RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  return RealInterval(rounding::down(a.lo() + b.lo()), rounding::up(a.hi() + b.hi()));
}

inline RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  return RealInterval(rounding::down(a.lo() - b.hi()), rounding::up(a.hi() - b.lo()));
}

inline RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  const double p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  return RealInterval(rounding::down(*std::min_element(p, p + 4)), rounding::up(*std::max_element(p, p + 4)));
}

inline RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains(0.0)) throw DomainViolation("real division by an interval containing 0");
  const double q[4] = {a.lo() / b.lo(), a.lo() / b.hi(), a.hi() / b.lo(), a.hi() / b.hi()};
  return RealInterval(rounding::down(*std::min_element(q, q + 4)), rounding::up(*std::max_element(q, q + 4)));
}

inline RealInterval sqr(const RealInterval& a) {
  const double lo = a.mig(), hi = a.mag();
  return RealInterval(lo == 0.0 ? 0.0 : rounding::down(lo * lo), rounding::up(hi * hi));
}

inline RealInterval sqrt(const RealInterval& a) {
  if (a.lo() < 0) throw DomainViolation("sqrt of an interval with negative part");
  // sqrt is correctly rounded in IEEE 754.
  return RealInterval(std::max(0.0, rounding::down(std::sqrt(a.lo()))), rounding::up(std::sqrt(a.hi())));
}

inline RealInterval log(const RealInterval& a) {
  if (!(a.lo() > 0)) throw DomainViolation("log of an interval reaching 0");
  return RealInterval(rounding::down_n(std::log(a.lo()), rounding::kTranscendentalUlps),
                      rounding::up_n(std::log(a.hi()), rounding::kTranscendentalUlps));
}

inline RealInterval hull(const RealInterval& a, const RealInterval& b) {
  return RealInterval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

/// [-r, r]
inline RealInterval symmetric(double r) { return RealInterval(-r, r); }

/// Enclosure of π.
inline RealInterval pi_interval() { return RealInterval(std::numbers::pi, rounding::up(std::numbers::pi)); }

/// Rectangle re × im in the complex plane.
class ComplexInterval {
 public:
  ComplexInterval() = default;
  ComplexInterval(RealInterval re, RealInterval im) : re_(re), im_(im) {}
  explicit ComplexInterval(std::complex<double> z) : re_(RealInterval::point(z.real())), im_(RealInterval::point(z.imag())) {}
  explicit ComplexInterval(double x) : re_(RealInterval::point(x)), im_(RealInterval::point(0.0)) {}

  /// Square box of half-width r around z (endpoints rounded outward).
  static ComplexInterval around(std::complex<double> z, double r) {
    return ComplexInterval(RealInterval(rounding::down(z.real() - r), rounding::up(z.real() + r)),
                           RealInterval(rounding::down(z.imag() - r), rounding::up(z.imag() + r)));
  }

  const RealInterval& re() const { return re_; }
  const RealInterval& im() const { return im_; }
  std::complex<double> mid() const { return {re_.mid(), im_.mid()}; }

  bool contains(std::complex<double> z) const { return re_.contains(z.real()) && im_.contains(z.imag()); }
  bool contains(const ComplexInterval& o) const { return re_.contains(o.re_) && im_.contains(o.im_); }
  bool interior_contains(const ComplexInterval& o) const {
    return re_.interior_contains(o.re_) && im_.interior_contains(o.im_);
  }
  bool contains_zero() const { return re_.contains(0.0) && im_.contains(0.0); }

  friend bool operator==(const ComplexInterval&, const ComplexInterval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ComplexInterval& z) {
    return os << z.re_ << " + i" << z.im_;
  }

 private:
  RealInterval re_;
  RealInterval im_;
};

inline ComplexInterval operator-(const ComplexInterval& a) { return {-a.re(), -a.im()}; }
inline ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}
inline ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re() - b.re(), a.im() - b.im()};
}
inline ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
inline ComplexInterval operator*(const RealInterval& a, const ComplexInterval& b) { return {a * b.re(), a * b.im()}; }

/// Squared modulus, enclosing |z|² over the rectangle.
inline RealInterval norm(const ComplexInterval& z) { return sqr(z.re()) + sqr(z.im()); }

inline ComplexInterval reciprocal(const ComplexInterval& w) {
  if (w.contains_zero()) throw DomainViolation("complex reciprocal of a box containing 0");
  const RealInterval n = norm(w);
  return {w.re() / n, -w.im() / n};
}

inline ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) { return a * reciprocal(b); }

/// 1 / (1 - z)
inline ComplexInterval reciprocal_one_minus(const ComplexInterval& z) {
  return reciprocal(ComplexInterval(1.0) - z);
}

/// Enclosure of log|z| over the rectangle; requires 0 outside the box.
inline RealInterval log_abs(const ComplexInterval& z) {
  if (z.contains_zero()) throw DomainViolation("log|z| on a box containing 0");
  // Nearest point to the origin is the clamp of 0 into the box.
  const double nx = z.re().mig(), ny = z.im().mig();
  const double fx = z.re().mag(), fy = z.im().mag();
  const double dmin = rounding::down_n(std::hypot(nx, ny), 2);
  const double dmax = rounding::up_n(std::hypot(fx, fy), 2);
  return log(RealInterval(std::max(dmin, std::numeric_limits<double>::min()), dmax));
}

/// Enclosure of arg z (principal branch) over the rectangle. The box must
/// stay off the closed negative real axis; the range of arg over a convex
/// set away from the cut is attained at its corners.
inline RealInterval arg(const ComplexInterval& z) {
  if (!(z.im().lo() > 0 || z.im().hi() < 0 || z.re().lo() > 0))
    throw DomainViolation("arg on a box meeting the branch cut (-inf, 0]");
  const double xs[2] = {z.re().lo(), z.re().hi()};
  const double ys[2] = {z.im().lo(), z.im().hi()};
  double lo = INFINITY, hi = -INFINITY;
  for (const double x : xs)
    for (const double y : ys) {
      const double a = std::atan2(y, x);
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  return RealInterval(rounding::down_n(lo, rounding::kTranscendentalUlps),
                      rounding::up_n(hi, rounding::kTranscendentalUlps));
}

/// Principal logarithm: log|z| + i·arg z.
inline ComplexInterval log(const ComplexInterval& z) {
  const RealInterval a = arg(z);  // checks the branch cut first
  return {log_abs(z), a};
}

}  // namespace bandforge::verified
