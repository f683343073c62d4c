#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "bandforge/gluing/bloch_wigner.hpp"
#include "bandforge/verified/interval.hpp"

namespace bandforge::verified {

namespace detail {

// Tightest double interval around an exact rational.
inline RealInterval enclose(const boost::multiprecision::cpp_rational& q) {
  using boost::multiprecision::cpp_rational;
  double lo = q.convert_to<double>();
  double hi = lo;
  while (cpp_rational(lo) > q) lo = rounding::down(lo);
  while (cpp_rational(hi) < q) hi = rounding::up(hi);
  return RealInterval(lo, hi);
}

inline const std::vector<RealInterval>& dilog_coefficient_enclosures() {
  static const std::vector<RealInterval> coeffs = [] {
    std::vector<RealInterval> out;
    for (const auto& c : gluing::detail::dilog_coefficients_exact()) out.push_back(enclose(c));
    return out;
  }();
  return coeffs;
}

}  // namespace detail

/// Enclosure of the Bloch–Wigner function over a box in the upper or lower
/// half-plane. Same route as the point version: move to the anharmonic
/// image chosen at the box midpoint, sum the Bernoulli series in
/// u = -log(1 - w) in interval arithmetic, and add a rigorous bound for the
/// truncated tail, using |B_n|/n! <= 4/(2π)^n.
inline RealInterval bloch_wigner(const ComplexInterval& z) {
  if (z.im().contains(0.0)) throw DomainViolation("Bloch-Wigner box meets the real axis");
  const auto t = gluing::detail::best_transform(z.mid());
  const ComplexInterval w = gluing::detail::apply_transform(t.which, z);
  const ComplexInterval one_minus_w = ComplexInterval(1.0) - w;
  const ComplexInterval u = -log(one_minus_w);

  const auto& c = detail::dilog_coefficient_enclosures();
  const int terms = static_cast<int>(c.size());
  ComplexInterval li2(0.0);
  for (int n = terms - 1; n >= 0; --n) li2 = (li2 + ComplexInterval(c[n], RealInterval::point(0.0))) * u;

  const double umax = rounding::up(std::hypot(u.re().mag(), u.im().mag()));
  const double ratio = rounding::up(umax / (2.0 * std::numbers::pi));
  if (!(ratio < 0.5)) throw DomainViolation("dilogarithm series argument too large for a rigorous tail bound");
  // 4|u| r^terms / (1 - r), with 1/(1 - r) <= 2.
  const double tail = rounding::up_n(8.0 * umax * std::pow(ratio, terms), 4);

  const RealInterval im_li2 = li2.im() + symmetric(tail);
  const RealInterval d = im_li2 + arg(one_minus_w) * log_abs(w);
  return t.sign > 0 ? d : -d;
}

}  // namespace bandforge::verified
