#include "blaschke/asymptotics.hpp"

#include <json.hpp>

#include <cmath>

namespace blaschke {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

constexpr double kPi = 3.14159265358979323846264338328;

}  // namespace

double gamma_reciprocal_n(int N) {
  if (N < 2) throw ParameterOutOfRange("gamma_reciprocal_n: N must be >= 2");
  return std::tgamma(1.0 / N);
}

double vdc_first_order_bound(double g_prime_a, double g_prime_b) {
  if (g_prime_a == 0.0 || g_prime_b == 0.0) {
    throw ZeroDerivative("vdc_first_order_bound: endpoint derivative vanishes");
  }
  return 2.0 / std::fabs(g_prime_a) + 2.0 / std::fabs(g_prime_b);
}

double vdc_second_order_bound(double M, double mu) {
  if (!(M > 0.0) || !(mu > 0.0)) {
    throw NonPositiveInput("vdc_second_order_bound: M and mu must be positive");
  }
  return 8.0 * M / std::sqrt(mu);
}

cplx stationary_phase_term(const BlaschkeProduct& B, const CriticalPoint& cp,
                           int n, std::int64_t k) {
  if (n < 1) throw ParameterOutOfRange("stationary_phase_term: n must be >= 1");
  const int N = cp.multiplicity_order;
  const double psiN = cp.psi_N_value;
  const double amp0 =
      (2.0 / N) * std::pow(factorial(N) / (n * std::fabs(psiN)), 1.0 / N) *
      gamma_reciprocal_n(N);
  double phase = n * psi_phase(B, Angle(cp.xi)) - static_cast<double>(k) * cp.xi;
  double amp = amp0;
  if (N % 2 == 0) {
    phase += (psiN > 0.0 ? 1.0 : -1.0) * kPi / (2.0 * N);
  } else {
    amp *= std::cos(kPi / (2.0 * N));
  }
  return std::polar(amp, phase);
}

PeakPrediction predict_peak(const BlaschkeProduct& B, const PhasePortrait& portrait,
                            int n) {
  if (portrait.dominant.empty()) {
    throw EmptyPortrait("predict_peak: portrait has no dominant class");
  }
  const CriticalPoint& rep = portrait.points[portrait.representative];
  const std::int64_t k0 =
      static_cast<std::int64_t>(std::floor(n * rep.psi_prime_value));

  PeakPrediction out;
  out.n = n;
  for (int d = 0; d < portrait.D; ++d) {
    const std::int64_t kd = k0 + d;
    out.predicted_k.push_back(kd);
    std::vector<cplx> row;
    cplx sum(0.0, 0.0);
    for (int idx : portrait.dominant) {
      const cplx term = stationary_phase_term(B, portrait.points[idx], n, kd);
      row.push_back(term);
      sum += term;
    }
    out.terms.push_back(std::move(row));
    out.sigma.push_back(sum / kTwoPi);
    out.omega = std::max(out.omega, std::abs(out.sigma.back()));
  }
  return out;
}

std::string PeakPrediction::to_json_text() const {
  nlohmann::json j;
  j["n"] = n;
  j["predicted_k"] = predicted_k;
  j["omega"] = omega;
  j["sigma"] = nlohmann::json::array();
  for (const cplx& s : sigma) j["sigma"].push_back({s.real(), s.imag()});
  j["terms"] = nlohmann::json::array();
  for (const auto& row : terms) {
    nlohmann::json jr = nlohmann::json::array();
    for (const cplx& t : row) jr.push_back({t.real(), t.imag()});
    j["terms"].push_back(jr);
  }
  return j.dump();
}

}  // namespace blaschke
