#ifndef BLASCHKE_MODEL_SPACE_HPP
#define BLASCHKE_MODEL_SPACE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blaschke/coefficients.hpp"

namespace blaschke {

/// Malmquist-Walsh orthonormal basis of K_B for the spectrum
/// (lambda_1 x n, ..., lambda_m x n), each vector as its first L Taylor
/// coefficients. gram_residual is max |<e_i,e_j> - delta_ij|.
struct MalmquistWalshBasis {
  std::vector<std::vector<cplx>> vectors;  // n*m vectors of length L
  int L = 0;
  double gram_residual = 0.0;
};

/// Matrix of the backward shift f -> (f - f(0))/z on K_B in the
/// Malmquist-Walsh basis, stored row-wise (entry (i, j) is <S e_i, e_j>, the
/// e_j-component of S e_i), which is the lower-triangular orientation; the
/// column-vector matrix of S is its transpose. The diagonal matches the
/// conjugated spectrum (each reproducing kernel is an eigenvector with
/// eigenvalue conj(lambda)), which is recorded rather than silently
/// reconciled with the unconjugated convention.
struct ShiftOperator {
  std::vector<cplx> distinct;
  int n = 0;
  int dim = 0;
  int L = 0;
  Eigen::MatrixXcd matrix;
  double max_above_diag = 0.0;
  std::string diag_matches;   // "conjugate" | "plain" | "both" | "neither"
  double det_mod_log10 = 0.0; // log10 |prod diag| = n sum log10|lambda_j|

  std::string to_json_text() const;
};

/// Quantities of the inverse-norm lower bound for S on (K_B, l^infty_A).
/// |g(0)|, the bound itself and |det S| overflow double at desk-scale n, so
/// they are carried as log10 magnitudes (plus the argument for g(0)); the
/// products ratio = |det S| * bound and phi_lb stay O(n^{1/N}) and are exact
/// cancellations computed in log space.
struct SchafferReport {
  int n = 0;
  int N = 0;              // decay exponent of the underlying product
  double e_peak = 0.0;    // ||hat e_{nm}||_inf
  double g0_log10 = 0.0;  // log10 |g(0)|
  double g0_arg = 0.0;    // arg g(0), in (-pi, pi]
  double sinv_lb_log10 = 0.0;
  double det_log10 = 0.0;
  double ratio = 0.0;     // det_mod * sinv_lb
  double phi_lb = 0.0;    // 1/||hat{B^n}||_inf - prod |lambda_j|^n

  static std::string csv_header();  // n,N,e_peak,g0_mod,sinv_lb,det_mod,ratio,phi_lb
  std::string to_csv_row() const;
  std::string to_json_text() const;
};

/// Build the basis coefficient vectors. L defaults to dim + 50*m and doubles
/// internally (up to 4 times) while the Gram residual exceeds 1e-9; throws
/// TruncationTooShort when the retries are exhausted.
MalmquistWalshBasis malmquist_walsh_basis(const std::vector<cplx>& distinct,
                                          int n, std::optional<int> L = {});

/// Matrix of S by numerical projection <S e_j, e_i>.
ShiftOperator build_shift(const std::vector<cplx>& distinct, int n,
                          std::optional<int> L = {});

/// Matrix-free certified lower bound on ||S^{-1}||_{l^infty_A} and the
/// derived report. hat e_{nm} is computed by the certified sampling scheme
/// applied to (1-|lambda_m|^2)^{1/2} B^n/(z - lambda_m).
SchafferReport schaffer_lower_bound(const std::vector<cplx>& distinct, int n,
                                    double eps,
                                    std::int64_t max_samples = kDefaultSampleBudget);

/// Remark-style bound 1/||hat{B^n}||_inf - prod |lambda_j|^n (may be negative
/// for tiny n; reported as-is).
double phi_lower_bound(const std::vector<cplx>& distinct, int n, double eps,
                       std::int64_t max_samples = kDefaultSampleBudget);

/// Heuristic direct estimate of ||S^{-1}||_{l^infty_A} by ratio maximization
/// over coordinate vectors plus inverse power iteration; always >= the ratio
/// at the last basis vector, hence >= the matrix-free bound up to truncation
/// noise. Cross-check only; feasible for small dim.
double estimate_inverse_norm_linf(const ShiftOperator& S,
                                  const MalmquistWalshBasis& basis,
                                  int iterations = 200);

}  // namespace blaschke

#endif
