#include "blaschke/coefficients.hpp"

#include <fftw3.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace blaschke {

namespace {

std::int64_t next_pow2(std::int64_t v) {
  std::int64_t m = 1;
  while (m < v) m <<= 1;
  return m;
}

void fft_forward_scaled(std::vector<cplx>& data) {
  const int M = static_cast<int>(data.size());
  fftw_plan plan = fftw_plan_dft_1d(
      M, reinterpret_cast<fftw_complex*>(data.data()),
      reinterpret_cast<fftw_complex*>(data.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  const double inv = 1.0 / M;
  for (auto& c : data) c *= inv;
}

struct RoundStats {
  double sup = 0.0;
  std::int64_t argmax = 0;
  double l1 = 0.0;
  double l2 = 0.0;
};

RoundStats spectrum_stats(const std::vector<cplx>& bins) {
  RoundStats s;
  double l2sq = 0.0;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(bins.size()); ++k) {
    const double a = std::abs(bins[k]);
    if (a > s.sup) {
      s.sup = a;
      s.argmax = k;
    }
    s.l1 += a;
    l2sq += a * a;
  }
  s.l2 = std::sqrt(l2sq);
  return s;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void for_each_circle_point(std::int64_t M,
                           const std::function<cplx(cplx)>& value,
                           std::vector<cplx>& out) {
  out.resize(static_cast<size_t>(M));
  // Rotation recurrence resynced every block; keeps the grid accurate to
  // ~1e-13 without a sincos per point.
  constexpr std::int64_t kBlock = 1024;
  const double step = kTwoPi / static_cast<double>(M);
  const cplx w = std::polar(1.0, step);
  for (std::int64_t base = 0; base < M; base += kBlock) {
    cplx z = std::polar(1.0, step * static_cast<double>(base));
    const std::int64_t end = std::min(base + kBlock, M);
    for (std::int64_t j = base; j < end; ++j) {
      out[static_cast<size_t>(j)] = value(z);
      z *= w;
    }
  }
}

SampledSpectrum certified_spectrum(const std::function<void(std::vector<cplx>&)>& fill,
                            std::int64_t m0, double eps, std::int64_t max_samples) {
  std::int64_t M = next_pow2(m0);
  if (M > max_samples) {
    throw BudgetExceeded("certified_spectrum: initial sample count " +
                         std::to_string(M) + " exceeds budget " +
                         std::to_string(max_samples));
  }

  std::vector<cplx> bins(static_cast<size_t>(M));
  fill(bins);
  fft_forward_scaled(bins);
  RoundStats prev = spectrum_stats(bins);

  for (;;) {
    if (2 * M > max_samples) {
      throw BudgetExceeded("certified_spectrum: doubling past budget " +
                           std::to_string(max_samples));
    }
    M *= 2;
    bins.assign(static_cast<size_t>(M), cplx{});
    fill(bins);
    fft_forward_scaled(bins);
    RoundStats cur = spectrum_stats(bins);

    const double l2_defect = std::fabs(cur.l2 - 1.0);
    const double sup_drift = std::fabs(cur.sup - prev.sup);
    if (l2_defect < eps && sup_drift < eps / 10.0) {
      SampledSpectrum out;
      out.bins = std::move(bins);
      out.M = M;
      out.sup = cur.sup;
      out.argmax = cur.argmax;
      out.l1 = cur.l1;
      out.l2 = cur.l2;
      out.cert_defect = l2_defect + sup_drift;
      return out;
    }
    prev = cur;
  }
}

CoefficientSeries fourier_coeffs(const BlaschkeProduct& B, int n, double eps,
                                 std::int64_t max_samples) {
  if (n < 1) throw ParameterOutOfRange("fourier_coeffs: n must be >= 1");
  if (!(eps > 0.0) || !(eps < 1e-3)) {
    throw ParameterOutOfRange("fourier_coeffs: eps must lie in (0, 1e-3)");
  }

  const double pmax = max_psi_prime(B);
  const std::int64_t m0 =
      4 * (static_cast<std::int64_t>(std::ceil(n * pmax)) + B.degree());
  const std::vector<cplx> zeros = B.zeros();

  auto fill = [&](std::vector<cplx>& samples) {
    for_each_circle_point(
        samples.size(),
        [&](cplx z) {
          cplx b(1.0, 0.0);
          for (const cplx& lam : zeros) b *= (z - lam) / (1.0 - std::conj(lam) * z);
          return std::polar(1.0, n * std::arg(b));
        },
        samples);
  };

  SampledSpectrum spec = certified_spectrum(fill, m0, eps, max_samples);

  // Retain the head: K is the first index whose tail mass is below eps.
  const std::int64_t M = spec.M;
  double tail = 0.0;
  std::int64_t K = M;
  for (std::int64_t k = M - 1; k >= 0; --k) {
    const double a = std::abs(spec.bins[static_cast<size_t>(k)]);
    if (tail + a * a >= eps) break;
    tail += a * a;
    K = k;
  }

  CoefficientSeries out;
  out.n = n;
  out.K = K;
  out.M = M;
  out.aliasing_bound = tail + spec.cert_defect;
  out.sup_norm = spec.sup;
  out.argmax_k = spec.argmax;
  out.l1_norm = spec.l1;
  out.l2_norm = spec.l2;
  out.coeffs.assign(spec.bins.begin(), spec.bins.begin() + K);
  return out;
}

NormScan norm_scan(const BlaschkeProduct& B, const std::vector<int>& n_list,
                   double eps, std::int64_t max_samples) {
  if (n_list.empty()) throw ValidationError("norm_scan: n_list must be nonempty");
  for (size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw ValidationError("norm_scan: n_list must be strictly increasing");
    }
  }
  NormScan scan;
  for (int n : n_list) {
    const CoefficientSeries s = fourier_coeffs(B, n, eps, max_samples);
    scan.rows.push_back({s.n, s.sup_norm, s.argmax_k, s.l1_norm, s.l2_norm});
  }
  return scan;
}

ExponentFit fit_exponent(const NormScan& scan, NormColumn column) {
  if (scan.rows.size() < 4) {
    throw ParameterOutOfRange("fit_exponent: need at least 4 rows");
  }
  std::vector<double> xs, ys;
  for (const auto& row : scan.rows) {
    const double v = column == NormColumn::kSup ? row.sup_norm : row.l1_norm;
    if (!(v > 0.0)) throw DegenerateFit("fit_exponent: nonpositive value in column");
    xs.push_back(std::log(static_cast<double>(row.n)));
    ys.push_back(std::log(v));
  }
  const size_t k = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < k; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = k * sxx - sx * sx;
  ExponentFit fit;
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  for (size_t i = 0; i < k; ++i) {
    fit.max_residual = std::max(fit.max_residual,
                                std::fabs(ys[i] - fit.slope * xs[i] - fit.intercept));
  }
  return fit;
}

std::string CoefficientSeries::to_json_text() const {
  nlohmann::json j;
  j["n"] = n;
  j["K"] = K;
  j["M"] = M;
  j["aliasing_bound"] = aliasing_bound;
  j["coeffs"] = nlohmann::json::array();
  for (const cplx& c : coeffs) j["coeffs"].push_back({c.real(), c.imag()});
  return j.dump();
}

std::string NormScan::to_csv_text() const {
  std::ostringstream os;
  os << "n,sup,argmax_k,l1,l2\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_g17(r.sup_norm) << ',' << r.argmax_k << ','
       << format_g17(r.l1_norm) << ',' << format_g17(r.l2_norm) << '\n';
  }
  return os.str();
}

std::string NormScan::to_json_text() const {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"n", r.n},
                         {"sup", r.sup_norm},
                         {"argmax_k", r.argmax_k},
                         {"l1", r.l1_norm},
                         {"l2", r.l2_norm}});
  }
  return j.dump();
}

}  // namespace blaschke
