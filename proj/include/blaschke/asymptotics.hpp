#ifndef BLASCHKE_ASYMPTOTICS_HPP
#define BLASCHKE_ASYMPTOTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "blaschke/phase_analysis.hpp"

namespace blaschke {

/// Leading stationary-phase prediction for the coefficients of B^n near the
/// dominant critical points. sigma holds the predicted coefficient at each
/// k_d (the 1/(2 pi) of the Fourier integral is included there, so omega is
/// directly comparable to a sup norm); terms holds the raw oscillatory
/// integrals I_{l,d}.
struct PeakPrediction {
  int n = 0;
  std::vector<std::int64_t> predicted_k;        // k_d = floor(n psi'(xi_r)) + d
  std::vector<std::vector<cplx>> terms;         // [d][l], l over the dominant class
  std::vector<cplx> sigma;                      // per d
  double omega = 0.0;                           // max_d |sigma_d|

  std::string to_json_text() const;
};

/// Leading term of the oscillatory integral over a neighborhood of cp.xi for
/// the phase n psi_B(theta) - k theta:
///   even N: (2/N)(N!/(n |psi^{(N)}|))^{1/N} e^{i(n psi(xi) - k xi +- pi/(2N))} Gamma(1/N)
///   odd  N: (2/N)(N!/(n |psi^{(N)}|))^{1/N} e^{i(n psi(xi) - k xi)} cos(pi/(2N)) Gamma(1/N)
/// The +- follows the sign of psi^{(N)}(xi) (conjugate phase when negative).
cplx stationary_phase_term(const BlaschkeProduct& B, const CriticalPoint& cp,
                           int n, std::int64_t k);

/// Sum the terms over the dominant class for d = 0..D-1.
PeakPrediction predict_peak(const BlaschkeProduct& B, const PhasePortrait& portrait,
                            int n);

/// First van der Corput bound 2/|g'(a)| + 2/|g'(b)| for monotone g, g'.
double vdc_first_order_bound(double g_prime_a, double g_prime_b);

/// Second van der Corput bound 8 M / sqrt(mu) for |F''| >= mu and positive
/// monotonic G <= M.
double vdc_second_order_bound(double M, double mu);

/// Gamma(1/N) for N >= 2.
double gamma_reciprocal_n(int N);

}  // namespace blaschke

#endif
