#ifndef BLASCHKE_BLASCHKE_PRODUCT_HPP
#define BLASCHKE_BLASCHKE_PRODUCT_HPP

#include <complex>
#include <string>
#include <vector>

#include "blaschke/errors.hpp"

namespace blaschke {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Angle on the circle, kept as its canonical representative in [0, 2pi).
class Angle {
 public:
  Angle() : theta_(0.0) {}
  explicit Angle(double radians) : theta_(reduce(radians)) {}

  double radians() const { return theta_; }

  /// Canonical representative in [0, 2pi); idempotent.
  static double reduce(double radians);

  /// Circular distance, in [0, pi].
  static double distance(double a, double b);

  bool almost_equal(const Angle& other, double tol = 1e-9) const {
    return distance(theta_, other.theta_) < tol;
  }

 private:
  double theta_;
};

/// Finite Blaschke product prod_j (z - lambda_j)/(1 - conj(lambda_j) z),
/// all zeros in the punctured open disk. Immutable; the zero list is the
/// single source of truth for every evaluation in the library.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::vector<cplx> zeros);

  int degree() const { return static_cast<int>(zeros_.size()); }
  const std::vector<cplx>& zeros() const { return zeros_; }

  /// Parse {"zeros":[{"re":r,"im":i},...]} (exact field names normative).
  static BlaschkeProduct from_json_text(const std::string& text);
  std::string to_json_text() const;

 private:
  std::vector<cplx> zeros_;
};

/// B(e^{i theta}); unimodular up to roundoff.
cplx eval_boundary(const BlaschkeProduct& B, Angle theta);

/// psi'_B(theta) = sum_j (1-rho_j^2)/(1+rho_j^2-2 rho_j cos(theta-theta_j)),
/// the derivative of the continuous argument of B(e^{i theta}). Strictly
/// positive (a sum of Poisson kernels); integrates to 2 pi m over a period.
double psi_prime(const BlaschkeProduct& B, Angle theta);

/// psi_B^{(s)}(theta) for s >= 1. For s >= 2 uses the exact closed form
///   psi^{(s+1)} = 2 Re sum_j i^s sum_{p=1..s} S2(s,p) p! u^p/(1-u)^{p+1},
/// u = conj(lambda_j) e^{i theta}, S2 = Stirling numbers of the second kind
/// (allocation-free, stable for |u| < 1). Orders above max_psi_derivative_order()
/// are rejected.
double psi_derivative(const BlaschkeProduct& B, Angle theta, int order);

int max_psi_derivative_order();

/// psi_B(theta): adaptive quadrature of psi' from 0 to theta, anchored at
/// psi_B(0) = arg B(1) in (-pi, pi]. Absolute tolerance ~1e-10.
double psi_phase(const BlaschkeProduct& B, Angle theta);

/// max over a deterministic grid (max(4096, 256 m) points) of psi'.
double max_psi_prime(const BlaschkeProduct& B);

}  // namespace blaschke

#endif
