#include "blaschke/model_space.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "blaschke/phase_analysis.hpp"

namespace blaschke {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

void validate_spectrum(const std::vector<cplx>& distinct, int n) {
  if (n < 1) throw ParameterOutOfRange("spectrum: multiplicity n must be >= 1");
  if (distinct.empty()) throw ValidationError("spectrum: needs at least one zero");
  for (size_t i = 0; i < distinct.size(); ++i) {
    const double r = std::abs(distinct[i]);
    if (!(r > 0.0) || !(r < 1.0)) {
      throw ValidationError("spectrum: zeros must satisfy 0 < |lambda| < 1");
    }
    for (size_t j = i + 1; j < distinct.size(); ++j) {
      if (std::abs(distinct[i] - distinct[j]) < 1e-12) {
        throw ValidationError("spectrum: zeros must be pairwise distinct");
      }
    }
  }
}

// In-place filter y = x / (1 - conj(lambda) z) on truncated Taylor series.
void divide_one_minus(std::vector<cplx>& x, cplx lambda) {
  const cplx lc = std::conj(lambda);
  for (size_t i = 1; i < x.size(); ++i) x[i] += lc * x[i - 1];
}

// In-place multiply by the Blaschke factor (z - lambda)/(1 - conj(lambda) z).
void multiply_factor(std::vector<cplx>& x, cplx lambda) {
  cplx prev(0.0, 0.0);  // (z - lambda) x
  for (size_t i = 0; i < x.size(); ++i) {
    const cplx cur = x[i];
    x[i] = prev - lambda * cur;
    prev = cur;
  }
  divide_one_minus(x, lambda);
}

cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  cplx s(0.0, 0.0);
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

MalmquistWalshBasis build_basis_once(const std::vector<cplx>& distinct, int n, int L) {
  const int dim = n * static_cast<int>(distinct.size());
  MalmquistWalshBasis basis;
  basis.L = L;
  basis.vectors.reserve(dim);

  std::vector<cplx> running(L, cplx(0.0, 0.0));  // prod of the first k-1 factors
  running[0] = 1.0;
  for (int k = 0; k < dim; ++k) {
    const cplx lam = distinct[k / n];
    std::vector<cplx> e = running;
    divide_one_minus(e, lam);
    const double norm = std::sqrt(1.0 - std::norm(lam));
    for (auto& c : e) c *= norm;
    basis.vectors.push_back(std::move(e));
    multiply_factor(running, lam);
  }

  basis.gram_residual = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const cplx g = inner(basis.vectors[i], basis.vectors[j]);
      const double expect = i == j ? 1.0 : 0.0;
      basis.gram_residual = std::max(basis.gram_residual, std::abs(g - expect));
    }
  }
  return basis;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Decimal-scientific rendering of 10^log10val; faithful for magnitudes far
// outside double range.
std::string format_pow10(double log10val) {
  double e = std::floor(log10val);
  double mant = std::pow(10.0, log10val - e);
  if (mant >= 10.0) {
    mant /= 10.0;
    e += 1.0;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.16fe%+d", mant, static_cast<int>(e));
  return buf;
}

double linf_a_norm(const MalmquistWalshBasis& basis, const Eigen::VectorXcd& coords) {
  double best = 0.0;
  const int dim = static_cast<int>(coords.size());
  for (int t = 0; t < basis.L; ++t) {
    cplx acc(0.0, 0.0);
    for (int k = 0; k < dim; ++k) acc += coords[k] * basis.vectors[k][t];
    best = std::max(best, std::abs(acc));
  }
  return best;
}

}  // namespace

MalmquistWalshBasis malmquist_walsh_basis(const std::vector<cplx>& distinct,
                                          int n, std::optional<int> L_opt) {
  validate_spectrum(distinct, n);
  const int m = static_cast<int>(distinct.size());
  const int dim = n * m;
  int L = L_opt.value_or(dim + 50 * m);
  if (L < dim + 50 * m) {
    throw ParameterOutOfRange("malmquist_walsh_basis: L must be >= dim + 50*m");
  }
  for (int attempt = 0; attempt <= 4; ++attempt) {
    MalmquistWalshBasis basis = build_basis_once(distinct, n, L);
    if (basis.gram_residual <= 1e-9) return basis;
    L *= 2;
  }
  throw TruncationTooShort(
      "malmquist_walsh_basis: Gram residual above 1e-9 after L doublings");
}

ShiftOperator build_shift(const std::vector<cplx>& distinct, int n,
                          std::optional<int> L_opt) {
  MalmquistWalshBasis basis = malmquist_walsh_basis(distinct, n, L_opt);
  const int dim = static_cast<int>(basis.vectors.size());

  ShiftOperator S;
  S.distinct = distinct;
  S.n = n;
  S.dim = dim;
  S.L = basis.L;
  S.matrix.resize(dim, dim);

  // (S f)(z) = (f - f(0))/z shifts coefficients down by one. S e_i lies in
  // span{e_1..e_i}, so storing row i as the expansion of S e_i makes the
  // matrix lower triangular; the standard column-vector matrix of S is the
  // transpose of this one.
  std::vector<cplx> shifted(basis.L);
  for (int i = 0; i < dim; ++i) {
    for (int t = 0; t + 1 < basis.L; ++t) shifted[t] = basis.vectors[i][t + 1];
    shifted[basis.L - 1] = 0.0;
    for (int j = 0; j < dim; ++j) {
      S.matrix(i, j) = inner(shifted, basis.vectors[j]);
    }
  }

  S.max_above_diag = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      S.max_above_diag = std::max(S.max_above_diag, std::abs(S.matrix(i, j)));
    }
  }

  double conj_dev = 0.0, plain_dev = 0.0;
  S.det_mod_log10 = 0.0;
  for (int k = 0; k < dim; ++k) {
    const cplx lam = distinct[k / n];
    conj_dev = std::max(conj_dev, std::abs(S.matrix(k, k) - std::conj(lam)));
    plain_dev = std::max(plain_dev, std::abs(S.matrix(k, k) - lam));
    S.det_mod_log10 += std::log10(std::abs(S.matrix(k, k)));
  }
  const double tol = 1e-8;
  if (conj_dev < tol && plain_dev < tol) S.diag_matches = "both";
  else if (conj_dev < tol) S.diag_matches = "conjugate";
  else if (plain_dev < tol) S.diag_matches = "plain";
  else S.diag_matches = "neither";
  return S;
}

SchafferReport schaffer_lower_bound(const std::vector<cplx>& distinct, int n,
                                    double eps, std::int64_t max_samples) {
  validate_spectrum(distinct, n);
  if (!(eps > 0.0) || !(eps < 1e-3)) {
    throw ParameterOutOfRange("schaffer_lower_bound: eps must lie in (0, 1e-3)");
  }
  const BlaschkeProduct B{std::vector<cplx>(distinct)};
  const cplx lam_m = distinct.back();
  const double unit = std::sqrt(1.0 - std::norm(lam_m));

  const double pmax = max_psi_prime(B);
  const std::int64_t m0 =
      4 * (static_cast<std::int64_t>(std::ceil(double(n) * pmax)) + B.degree());
  auto fill = [&](std::vector<cplx>& samples) {
    for_each_circle_point(
        samples.size(),
        [&](cplx z) {
          cplx b(1.0, 0.0);
          for (const cplx& lam : distinct) b *= (z - lam) / (1.0 - std::conj(lam) * z);
          return unit * std::polar(1.0, n * std::arg(b)) / (z - lam_m);
        },
        samples);
  };
  const SampledSpectrum spec = certified_spectrum(fill, m0, eps, max_samples);

  SchafferReport rep;
  rep.n = n;
  rep.N = analyze(B).N;
  rep.e_peak = spec.sup;

  // g = S^{-1} e_{nm} = g(0) + z e_{nm};
  // g(0) = -(1-|lambda_m|^2)^{1/2} prod_j (-conj(lambda_j))^{-n}.
  double sum_log10 = 0.0;
  double arg_sum = 0.0;
  for (const cplx& lam : distinct) {
    sum_log10 += std::log10(std::abs(lam));
    arg_sum += std::arg(-std::conj(lam));
  }
  rep.g0_log10 = 0.5 * std::log10(1.0 - std::norm(lam_m)) - n * sum_log10;
  rep.g0_arg = std::arg(std::polar(1.0, kPi - n * arg_sum));
  rep.det_log10 = n * sum_log10;

  // ||hat g||_inf = max(|g(0)|, e_peak) since hat g(k+1) = hat e_{nm}(k).
  const double g_sup_log10 = std::max(rep.g0_log10, std::log10(rep.e_peak));
  rep.sinv_lb_log10 = g_sup_log10 - std::log10(rep.e_peak);
  rep.ratio = std::pow(10.0, rep.det_log10 + rep.sinv_lb_log10);
  rep.phi_lb = phi_lower_bound(distinct, n, eps, max_samples);
  return rep;
}

double phi_lower_bound(const std::vector<cplx>& distinct, int n, double eps,
                       std::int64_t max_samples) {
  validate_spectrum(distinct, n);
  const BlaschkeProduct B{std::vector<cplx>(distinct)};
  const CoefficientSeries series = fourier_coeffs(B, n, eps, max_samples);
  double det_mod = 1.0;
  for (const cplx& lam : distinct) det_mod *= std::pow(std::abs(lam), n);
  return 1.0 / series.sup_norm - det_mod;
}

double estimate_inverse_norm_linf(const ShiftOperator& S,
                                  const MalmquistWalshBasis& basis,
                                  int iterations) {
  const int dim = S.dim;
  // coords(S f) = matrix^T coords(f): the stored matrix is row-convention
  const Eigen::MatrixXcd action = S.matrix.transpose();
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(action);
  auto ratio = [&](const Eigen::VectorXcd& c) {
    const double denom = linf_a_norm(basis, c);
    if (denom == 0.0) return 0.0;
    return linf_a_norm(basis, lu.solve(c)) / denom;
  };

  double best = 0.0;
  for (int j = 0; j < dim; ++j) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
    e[j] = 1.0;
    best = std::max(best, ratio(e));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[dim - 1] = 1.0;
  for (int it = 0; it < iterations; ++it) {
    v = lu.solve(v);
    const double scale = v.cwiseAbs().maxCoeff();
    if (!(scale > 0.0) || !std::isfinite(scale)) break;
    v /= scale;
    best = std::max(best, ratio(v));
  }
  return best;
}

std::string ShiftOperator::to_json_text() const {
  nlohmann::json j;
  j["n"] = n;
  j["dim"] = dim;
  j["L"] = L;
  j["distinct"] = nlohmann::json::array();
  for (const cplx& lam : distinct) {
    j["distinct"].push_back({{"re", lam.real()}, {"im", lam.imag()}});
  }
  j["max_above_diag"] = max_above_diag;
  j["diag_matches"] = diag_matches;
  j["det_mod_log10"] = det_mod_log10;
  j["matrix"] = nlohmann::json::array();
  for (int i = 0; i < dim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < dim; ++k) {
      row.push_back({matrix(i, k).real(), matrix(i, k).imag()});
    }
    j["matrix"].push_back(row);
  }
  return j.dump();
}

std::string SchafferReport::csv_header() {
  return "n,N,e_peak,g0_mod,sinv_lb,det_mod,ratio,phi_lb";
}

std::string SchafferReport::to_csv_row() const {
  std::ostringstream os;
  os << n << ',' << N << ',' << format_g17(e_peak) << ',' << format_pow10(g0_log10)
     << ',' << format_pow10(sinv_lb_log10) << ',' << format_pow10(det_log10) << ','
     << format_g17(ratio) << ',' << format_g17(phi_lb);
  return os.str();
}

std::string SchafferReport::to_json_text() const {
  nlohmann::json j;
  j["n"] = n;
  j["N"] = N;
  j["e_peak"] = e_peak;
  j["g0_log10"] = g0_log10;
  j["g0_arg"] = g0_arg;
  j["sinv_lb_log10"] = sinv_lb_log10;
  j["det_log10"] = det_log10;
  j["ratio"] = ratio;
  j["phi_lb"] = phi_lb;
  return j.dump();
}

}  // namespace blaschke
