#ifndef BLASCHKE_PHASE_ANALYSIS_HPP
#define BLASCHKE_PHASE_ANALYSIS_HPP

#include <string>
#include <vector>

#include "blaschke/blaschke_product.hpp"

namespace blaschke {

/// Zero xi of psi'' of order (multiplicity_order - 2): psi''(xi) = ... =
/// psi^{(multiplicity_order-1)}(xi) = 0 and psi^{(multiplicity_order)}(xi) != 0.
struct CriticalPoint {
  double xi = 0.0;                // in [0, 2pi)
  int multiplicity_order = 0;     // N_ell >= 3
  double psi_prime_value = 0.0;   // psi'(xi)
  double psi_N_value = 0.0;       // psi^{(N_ell)}(xi), nonzero
};

/// The decay data of a product: the exponent N = max N_ell, the classes of
/// maximal-order points grouped by equal psi' value, and the dominant class.
struct PhasePortrait {
  std::vector<CriticalPoint> points;       // sorted by xi
  int N = 0;                               // max multiplicity_order
  std::vector<std::vector<int>> classes;   // indices into points, N_ell == N
  std::vector<int> dominant;               // the selected class (indices)
  int D = 0;                               // dominant.size()
  int representative = -1;                 // index into points, member of dominant

  std::string to_json_text() const;
};

/// Locate all zeros of psi'' on [0, 2pi) with multiplicity orders.
/// Sign changes of psi'' catch odd-order zeros; sign changes of psi''' with
/// |psi''| below tol*scale catch even-order ones. Roots are polished by
/// bisecting the highest-order derivative that still changes sign across the
/// bracket (that derivative has a simple zero at the root, so the polish is
/// immune to the roundoff plateau of a flat psi''). Orders come from the
/// smallest s >= 3 with |psi^{(s)}(xi)| > tol * max_grid|psi^{(s)}|.
///
/// Throws GridTooCoarse if two distinct roots land within 4 grid steps,
/// MultiplicityOverflow if no order within the ceiling clears its threshold.
std::vector<CriticalPoint> find_critical_points(const BlaschkeProduct& B,
                                                int grid_size, double tol);

/// Group maximal-order points into equal-psi' classes, pick the dominant one
/// (largest stationary-phase amplitude sum, ties to smallest xi).
PhasePortrait classify(const BlaschkeProduct& B,
                       const std::vector<CriticalPoint>& points);

/// find_critical_points + classify with default grid (max(4096, 256 m)) and
/// default threshold 1e-6.
PhasePortrait analyze(const BlaschkeProduct& B);

}  // namespace blaschke

#endif
