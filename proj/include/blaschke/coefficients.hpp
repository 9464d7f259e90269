#ifndef BLASCHKE_COEFFICIENTS_HPP
#define BLASCHKE_COEFFICIENTS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blaschke/blaschke_product.hpp"

namespace blaschke {

inline constexpr std::int64_t kDefaultSampleBudget = std::int64_t{1} << 24;

/// Fourier coefficients of B^n with an aliasing certificate. coeffs holds
/// k = 0..K-1; the norm statistics cover the full computed spectrum.
struct CoefficientSeries {
  int n = 0;
  std::vector<cplx> coeffs;       // retained head, k < K
  std::int64_t K = 0;
  std::int64_t M = 0;             // sample count of the accepted round
  double aliasing_bound = 0.0;    // discarded tail mass + |l2-1| + sup drift

  double sup_norm = 0.0;
  std::int64_t argmax_k = 0;
  double l1_norm = 0.0;
  double l2_norm = 0.0;

  std::string to_json_text() const;  // coefficients as (re, im) pairs
};

struct NormScanRow {
  int n = 0;
  double sup_norm = 0.0;
  std::int64_t argmax_k = 0;
  double l1_norm = 0.0;
  double l2_norm = 0.0;
};

struct NormScan {
  std::vector<NormScanRow> rows;  // sorted by n

  std::string to_csv_text() const;  // header "n,sup,argmax_k,l1,l2"
  std::string to_json_text() const;
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

enum class NormColumn { kSup, kL1 };

/// Sample B^n at M equispaced circle points and transform. M starts at the
/// next power of two >= 4*(ceil(n*max psi') + m) and doubles until the
/// spectrum certifies itself: |l2 - 1| < eps and sup drift < eps/10 between
/// rounds. K keeps all bins until the discarded l2 mass drops below eps.
/// Throws BudgetExceeded when the next round would pass max_samples.
CoefficientSeries fourier_coeffs(const BlaschkeProduct& B, int n, double eps,
                                 std::int64_t max_samples = kDefaultSampleBudget);

/// One fourier_coeffs row per n.
NormScan norm_scan(const BlaschkeProduct& B, const std::vector<int>& n_list,
                   double eps, std::int64_t max_samples = kDefaultSampleBudget);

/// Least-squares line through (log n, log value); slope estimates the decay
/// exponent. Throws DegenerateFit on nonpositive values.
ExponentFit fit_exponent(const NormScan& scan, NormColumn column);

/// Shared sampling machinery: fill(samples) must populate samples.size()
/// equispaced boundary values of an H^2 function with unit L^2 norm; the
/// result is its certified (alias-controlled) coefficient spectrum.
struct SampledSpectrum {
  std::vector<cplx> bins;
  std::int64_t M = 0;
  double sup = 0.0;
  std::int64_t argmax = 0;
  double l1 = 0.0;
  double l2 = 0.0;
  double cert_defect = 0.0;  // |l2-1| + inter-round sup drift
};

SampledSpectrum certified_spectrum(const std::function<void(std::vector<cplx>&)>& fill,
                            std::int64_t m0, double eps, std::int64_t max_samples);

/// Equispaced boundary samples z_j = e^{2 pi i j/M} written through fn(j, z_j).
void for_each_circle_point(std::int64_t M,
                           const std::function<cplx(cplx)>& value,
                           std::vector<cplx>& out);

}  // namespace blaschke

#endif
