#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <vector>

namespace bandforge::gluing {

namespace detail {

inline constexpr int kDilogTerms = 40;

/// B_n / (n+1)! for n < kDilogTerms, exact. Li2(w) = sum_n c_n u^{n+1} with
/// u = -log(1 - w), convergent for |u| < 2π.
inline const std::vector<boost::multiprecision::cpp_rational>& dilog_coefficients_exact() {
  using Rational = boost::multiprecision::cpp_rational;
  static const std::vector<Rational> coeffs = [] {
    std::vector<Rational> bernoulli(kDilogTerms);
    bernoulli[0] = 1;
    for (int m = 1; m < kDilogTerms; ++m) {
      Rational sum = 0;
      boost::multiprecision::cpp_int binom = 1;  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        sum += Rational(binom) * bernoulli[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      bernoulli[m] = -sum / (m + 1);
    }
    std::vector<Rational> out(kDilogTerms);
    boost::multiprecision::cpp_int factorial = 1;
    for (int n = 0; n < kDilogTerms; ++n) {
      factorial *= (n + 1);
      out[n] = bernoulli[n] / Rational(factorial);
    }
    return out;
  }();
  return coeffs;
}

inline const std::vector<double>& dilog_coefficients() {
  static const std::vector<double> coeffs = [] {
    std::vector<double> out;
    for (const auto& c : dilog_coefficients_exact()) out.push_back(c.convert_to<double>());
    return out;
  }();
  return coeffs;
}

/// The six images of z under the anharmonic group, with the sign relating
/// D at the image to D(z): D(z) = sign · D(image).
struct DilogTransform {
  int which;  // 0: z, 1: 1/z, 2: 1-z, 3: 1/(1-z), 4: 1-1/z, 5: z/(z-1)
  int sign;
};

inline constexpr std::array<DilogTransform, 6> kTransforms{{{0, 1}, {1, -1}, {2, -1}, {3, 1}, {4, 1}, {5, -1}}};

template <class C>
C apply_transform(int which, const C& z) {
  const C one(1.0);
  switch (which) {
    case 1: return one / z;
    case 2: return one - z;
    case 3: return one / (one - z);
    case 4: return one - one / z;
    case 5: return z / (z - one);
    default: return z;
  }
}

/// Transform whose image w has the smallest |log(1 - w)|, so the series in
/// u = -log(1 - w) converges fastest.
inline DilogTransform best_transform(std::complex<double> z) {
  DilogTransform best = kTransforms[0];
  double best_u = INFINITY;
  for (const auto& t : kTransforms) {
    const auto w = apply_transform(t.which, z);
    const double u = std::abs(std::log(1.0 - w));
    if (std::isfinite(u) && u < best_u) {
      best_u = u;
      best = t;
    }
  }
  return best;
}

}  // namespace detail

/// Bloch–Wigner dilogarithm D(z) = Im Li2(z) + arg(1 - z)·log|z|.
///
/// D is invariant (up to sign) under z -> 1/z, 1-z, ...; we move z to the
/// image where the Bernoulli series of Li2 in -log(1 - w) converges fastest.
/// Returns 0 on the real line, including 0 and 1.
inline double bloch_wigner(std::complex<double> z) {
  if (z.imag() == 0.0) return 0.0;
  const auto t = detail::best_transform(z);
  const std::complex<double> w = detail::apply_transform(t.which, z);
  const std::complex<double> u = -std::log(1.0 - w);
  const auto& c = detail::dilog_coefficients();
  std::complex<double> li2 = 0;
  for (int n = detail::kDilogTerms - 1; n >= 0; --n) li2 = (li2 + c[n]) * u;
  const double d = li2.imag() + std::arg(1.0 - w) * std::log(std::abs(w));
  return t.sign * d;
}

/// Hyperbolic volume of the ideal tetrahedra with the given shapes.
template <class Shapes>
double volume(const Shapes& shapes) {
  double v = 0;
  for (const auto& z : shapes) v += bloch_wigner(z);
  return v;
}

}  // namespace bandforge::gluing
