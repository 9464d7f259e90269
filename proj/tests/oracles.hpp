// Test-only oracles, kept independent of the code paths they check.
#ifndef BLASCHKE_TESTS_ORACLES_HPP
#define BLASCHKE_TESTS_ORACLES_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace oracles {

/// Gamma(1/N) through the substitution t = s^N in the Euler integral:
/// Gamma(1/N) = N * integral_0^inf exp(-s^N) ds. Independent of std::tgamma.
inline double gamma_reciprocal(int N) {
  auto f = [N](double s) { return std::exp(-std::pow(s, N)); };
  const double upper = std::pow(60.0, 1.0 / N);
  double err = 0.0;
  const double val = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, upper, 14, 1e-14, &err);
  return N * val;
}

/// |integral_a^b G(t) e^{i F(t)} dt| by adaptive quadrature (tolerance ~1e-8
/// on each component).
inline double osc_integral_mod(const std::function<double(double)>& G,
                               const std::function<double(double)>& F, double a,
                               double b) {
  auto re = [&](double t) { return G(t) * std::cos(F(t)); };
  auto im = [&](double t) { return G(t) * std::sin(F(t)); };
  double e1 = 0.0, e2 = 0.0;
  const double vr = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      re, a, b, 15, 1e-9, &e1);
  const double vi = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      im, a, b, 15, 1e-9, &e2);
  return std::hypot(vr, vi);
}

/// Deterministic RNG for property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracles

#endif
