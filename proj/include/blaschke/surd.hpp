#ifndef BLASCHKE_SURD_HPP
#define BLASCHKE_SURD_HPP

#include <boost/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace blaschke {

using Rational = boost::rational<long long>;

/// Element a + b sqrt(d) of a quadratic extension of Q, exact coefficients.
/// d is a fixed squarefree integer; d < 0 gives an imaginary quadratic field
/// (sqrt(d) = i sqrt(|d|)), which covers the constructive examples' data
/// (d = -1, 13, -3). Operations between different fields are rejected.
struct Surd {
  Rational a{0};
  Rational b{0};
  long long d{1};

  Surd() = default;
  Surd(Rational a_, Rational b_, long long d_) : a(a_), b(b_), d(d_) {}
  static Surd rational(Rational r, long long d_) { return Surd(r, Rational(0), d_); }

  friend Surd operator+(const Surd& x, const Surd& y) {
    check(x, y);
    return Surd(x.a + y.a, x.b + y.b, x.d);
  }
  friend Surd operator-(const Surd& x, const Surd& y) {
    check(x, y);
    return Surd(x.a - y.a, x.b - y.b, x.d);
  }
  friend Surd operator*(const Surd& x, const Surd& y) {
    check(x, y);
    return Surd(x.a * y.a + x.b * y.b * Rational(x.d),
                x.a * y.b + x.b * y.a, x.d);
  }
  friend bool operator==(const Surd& x, const Surd& y) {
    return x.d == y.d && x.a == y.a && x.b == y.b;
  }

  Surd inverse() const {
    const Rational norm = a * a - b * b * Rational(d);
    if (norm == Rational(0)) throw std::domain_error("Surd: inverse of zero norm");
    return Surd(a / norm, -b / norm, d);
  }

  Surd pow(int k) const {
    Surd base = k >= 0 ? *this : inverse();
    int e = k >= 0 ? k : -k;
    Surd acc = rational(Rational(1), d);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Real part: for d < 0 the rational a; for d > 0 the number itself is
  /// real and has no rational real part in general.
  Rational real_part() const {
    if (d >= 0) throw std::domain_error("Surd: real_part needs d < 0");
    return a;
  }

  std::complex<double> to_complex() const {
    const double av = boost::rational_cast<double>(a);
    const double bv = boost::rational_cast<double>(b);
    if (d < 0) return {av, bv * std::sqrt(static_cast<double>(-d))};
    return {av + bv * std::sqrt(static_cast<double>(d)), 0.0};
  }

 private:
  static void check(const Surd& x, const Surd& y) {
    if (x.d != y.d) throw std::domain_error("Surd: mixed fields");
  }
};

}  // namespace blaschke

#endif
