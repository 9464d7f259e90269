#include "blaschke/phase_analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace blaschke {

namespace {

double bisect(const BlaschkeProduct& B, int order, double a, double b) {
  auto f = [&](double x) { return psi_derivative(B, Angle(x), order); };
  double fa = f(a);
  if (fa == 0.0) return a;
  for (int it = 0; it < 120 && b - a > 1e-15; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fa < 0.0) != (fm < 0.0)) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

bool sign_change(const BlaschkeProduct& B, int order, double a, double b) {
  const double fa = psi_derivative(B, Angle(a), order);
  const double fb = psi_derivative(B, Angle(b), order);
  return fa == 0.0 || fb == 0.0 || (fa < 0.0) != (fb < 0.0);
}

struct PolishedRoot {
  double xi = 0.0;
  int mult = 0;          // detected N_ell; 0 when psi'' is not small at xi
  double psi_N = 0.0;    // psi^{(mult)}(xi) when mult > 0 and within range
  double residual = 0.0; // |psi''(xi)|
};

// Threshold scan of the spec: the smallest s >= 3 whose derivative clears
// tol * (grid scale of that order). mult = maxorder+1 flags a point more
// degenerate than the ceiling resolves.
PolishedRoot scan_multiplicity(const BlaschkeProduct& B, double xi, double tol,
                               const std::vector<double>& scale) {
  PolishedRoot r;
  r.xi = xi;
  r.residual = std::fabs(psi_derivative(B, Angle(xi), 2));
  if (r.residual > tol * scale[2]) return r;  // not a root; mult stays 0
  const int maxo = max_psi_derivative_order();
  for (int s = 3; s <= maxo; ++s) {
    const double v = psi_derivative(B, Angle(xi), s);
    if (std::fabs(v) > tol * scale[s]) {
      r.mult = s;
      r.psi_N = v;
      return r;
    }
  }
  r.mult = maxo + 1;
  return r;
}

// Polish a root of psi'' bracketed by [lo, hi]. Plain bisection on psi''
// stalls in the roundoff plateau at a zero of order >= 2 (the plateau of a
// cubic zero is ~1e-5 wide), so walk the derivative ladder: at an
// order-(q+1) zero of psi'' the derivatives psi^{(s)}, s <= q+2, of matching
// parity all change sign there and psi^{(q+2)} has a simple zero, so
// bisecting a sign-changing higher derivative pins the root to full
// precision. Higher derivatives also carry unrelated zeros nearby, so every
// ladder level is bisected and the candidate showing the highest
// threshold-scan multiplicity wins (an off-root point can only under-read
// the degeneracy inside its bracket); ties go to the smaller |psi''|
// residual. The search window is padded by one grid step on each side
// because a root sitting on a grid node splits into two adjacent brackets
// whose endpoint values are pure roundoff; both copies must refine to the
// same point.
PolishedRoot ladder_polish(const BlaschkeProduct& B, double lo, double hi,
                           double pad, double tol,
                           const std::vector<double>& scale) {
  const int maxo = max_psi_derivative_order();
  const double a = lo - pad;
  const double b = hi + pad;
  PolishedRoot best = scan_multiplicity(
      B, bisect(B, sign_change(B, 2, lo, hi) ? 2 : 3, lo, hi), tol, scale);
  for (int s = 3; s <= maxo; ++s) {
    if (!sign_change(B, s, a, b)) continue;
    const PolishedRoot cand = scan_multiplicity(B, bisect(B, s, a, b), tol, scale);
    if (cand.mult > best.mult ||
        (cand.mult == best.mult && cand.residual < best.residual)) {
      best = cand;
    }
  }
  return best;
}

}  // namespace

std::vector<CriticalPoint> find_critical_points(const BlaschkeProduct& B,
                                                int grid_size, double tol) {
  if (grid_size < 256 * B.degree()) {
    throw ParameterOutOfRange("find_critical_points: grid_size must be >= 256*m");
  }
  if (!(tol > 0.0)) {
    throw ParameterOutOfRange("find_critical_points: tol must be positive");
  }

  const int G = grid_size;
  const double h = kTwoPi / G;
  const int maxo = max_psi_derivative_order();

  std::vector<double> pp2(G), pp3(G);
  for (int i = 0; i < G; ++i) {
    pp2[i] = psi_derivative(B, Angle(i * h), 2);
    pp3[i] = psi_derivative(B, Angle(i * h), 3);
  }
  // per-order grid scales; thresholds are relative to these
  std::vector<double> scale(maxo + 1, 0.0);
  for (int i = 0; i < G; ++i) {
    scale[2] = std::max(scale[2], std::fabs(pp2[i]));
    scale[3] = std::max(scale[3], std::fabs(pp3[i]));
  }
  for (int s = 4; s <= maxo; ++s) {
    for (int i = 0; i < G; ++i) {
      scale[s] = std::max(scale[s], std::fabs(psi_derivative(B, Angle(i * h), s)));
    }
  }
  if (scale[2] == 0.0) {
    throw MultiplicityOverflow("find_critical_points: psi'' vanishes identically on the grid");
  }

  // Bracket candidates: odd-order zeros flip the sign of psi''; even-order
  // zeros flip psi''' and leave |psi''| small at the flip.
  std::vector<PolishedRoot> roots;
  for (int i = 0; i < G; ++i) {
    const int j = (i + 1) % G;
    const double a = i * h;
    const double b = (i + 1) * h;  // may equal 2pi; evaluations wrap fine
    const bool flip2 = (pp2[i] == 0.0 && pp2[j] != 0.0) || (pp2[i] < 0.0) != (pp2[j] < 0.0);
    const bool flip3 = (pp3[i] == 0.0 && pp3[j] != 0.0) || (pp3[i] < 0.0) != (pp3[j] < 0.0);
    if (pp2[i] == 0.0 && pp2[j] == 0.0) {
      throw MultiplicityOverflow("find_critical_points: psi'' vanishes on adjacent grid nodes");
    }
    if (flip2 || flip3) {
      PolishedRoot r = ladder_polish(B, a, b, h, tol, scale);
      r.xi = Angle::reduce(r.xi);
      if (r.mult > 0) roots.push_back(r);
    }
  }
  if (roots.empty()) return {};

  // Deduplicate circularly. Ladder polishing makes duplicate detections of
  // one root coincide to near machine precision; a one-grid-step window is a
  // backstop and cannot swallow distinct roots, which must sit >= 4 steps
  // apart. Among duplicates the best-resolved scan wins.
  std::sort(roots.begin(), roots.end(),
            [](const PolishedRoot& x, const PolishedRoot& y) { return x.xi < y.xi; });
  auto better = [](const PolishedRoot& x, const PolishedRoot& y) {
    return x.mult > y.mult || (x.mult == y.mult && x.residual < y.residual);
  };
  std::vector<PolishedRoot> unique_roots;
  const double merge_window = h;
  for (const PolishedRoot& r : roots) {
    if (!unique_roots.empty() && r.xi - unique_roots.back().xi < merge_window) {
      if (better(r, unique_roots.back())) unique_roots.back() = r;
      continue;
    }
    unique_roots.push_back(r);
  }
  while (unique_roots.size() > 1 &&
         Angle::distance(unique_roots.front().xi, unique_roots.back().xi) <
             merge_window) {
    if (better(unique_roots.back(), unique_roots.front())) {
      unique_roots.front() = unique_roots.back();
    }
    unique_roots.pop_back();
  }

  for (size_t i = 0; i + 1 < unique_roots.size(); ++i) {
    if (unique_roots[i + 1].xi - unique_roots[i].xi < 4.0 * h) {
      throw GridTooCoarse("find_critical_points: roots closer than 4 grid steps");
    }
  }
  if (unique_roots.size() > 1 &&
      Angle::distance(unique_roots.front().xi, unique_roots.back().xi) < 4.0 * h) {
    throw GridTooCoarse("find_critical_points: roots closer than 4 grid steps (wrap)");
  }

  std::vector<CriticalPoint> out;
  for (const PolishedRoot& r : unique_roots) {
    if (r.mult > maxo) {
      throw MultiplicityOverflow(
          "find_critical_points: no derivative up to order " + std::to_string(maxo) +
          " clears its threshold at xi=" + std::to_string(r.xi));
    }
    CriticalPoint cp;
    cp.xi = r.xi;
    cp.psi_prime_value = psi_prime(B, Angle(r.xi));
    cp.multiplicity_order = r.mult;
    cp.psi_N_value = r.psi_N;
    out.push_back(cp);
  }
  return out;
}

PhasePortrait classify(const BlaschkeProduct& B,
                       const std::vector<CriticalPoint>& points) {
  if (points.empty()) {
    throw EmptyPortrait("classify: no critical points");
  }
  PhasePortrait p;
  p.points = points;
  std::sort(p.points.begin(), p.points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return a.xi < b.xi; });

  p.N = 0;
  for (const auto& cp : p.points) p.N = std::max(p.N, cp.multiplicity_order);

  // Partition {ell : N_ell = N} by equal psi' values.
  const double class_tol = 1e-8 * std::max(1.0, static_cast<double>(B.degree()));
  std::vector<int> maximal;
  for (int i = 0; i < static_cast<int>(p.points.size()); ++i) {
    if (p.points[i].multiplicity_order == p.N) maximal.push_back(i);
  }
  std::sort(maximal.begin(), maximal.end(), [&](int a, int b) {
    return p.points[a].psi_prime_value < p.points[b].psi_prime_value;
  });
  for (int idx : maximal) {
    if (!p.classes.empty() &&
        std::fabs(p.points[idx].psi_prime_value -
                  p.points[p.classes.back().front()].psi_prime_value) < class_tol) {
      p.classes.back().push_back(idx);
    } else {
      p.classes.push_back({idx});
    }
  }
  for (auto& cls : p.classes) {
    std::sort(cls.begin(), cls.end(),
              [&](int a, int b) { return p.points[a].xi < p.points[b].xi; });
  }

  // Dominant class: largest n-free stationary-phase amplitude
  // sum_ell (N!/|psi^{(N)}(xi_ell)|)^{1/N}; ties to smallest xi. Any class
  // certifies the lower bound; the largest one tracks the sup over k.
  double nfact = 1.0;
  for (int k = 2; k <= p.N; ++k) nfact *= k;
  double best_amp = -1.0;
  for (const auto& cls : p.classes) {
    double amp = 0.0;
    for (int idx : cls) {
      amp += std::pow(nfact / std::fabs(p.points[idx].psi_N_value), 1.0 / p.N);
    }
    const bool better =
        amp > best_amp * (1.0 + 1e-12) ||
        (std::fabs(amp - best_amp) <= best_amp * 1e-12 && !p.dominant.empty() &&
         p.points[cls.front()].xi < p.points[p.dominant.front()].xi);
    if (p.dominant.empty() || better) {
      best_amp = amp;
      p.dominant = cls;
    }
  }
  p.D = static_cast<int>(p.dominant.size());
  p.representative = p.dominant.front();
  return p;
}

PhasePortrait analyze(const BlaschkeProduct& B) {
  const int G = std::max(4096, 256 * B.degree());
  return classify(B, find_critical_points(B, G, 1e-6));
}

std::string PhasePortrait::to_json_text() const {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (const auto& cp : points) {
    j["points"].push_back({{"xi", cp.xi},
                           {"order", cp.multiplicity_order},
                           {"psi_prime", cp.psi_prime_value},
                           {"psi_N", cp.psi_N_value}});
  }
  j["N"] = N;
  j["D"] = D;
  j["dominant"] = dominant;
  return j.dump();
}

}  // namespace blaschke
