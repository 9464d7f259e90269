#include "blaschke/blaschke_product.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <json.hpp>

#include <array>
#include <cmath>

namespace blaschke {

namespace {

constexpr int kMaxOrder = 12;

// S2[s][p], Stirling numbers of the second kind, s,p <= kMaxOrder.
// Needed because (d/dtheta) = i u (d/du) on functions of u = conj(lambda) e^{i theta},
// and (u d/du)^s = sum_p S2(s,p) u^p (d/du)^p.
const std::array<std::array<double, kMaxOrder + 1>, kMaxOrder + 1>& stirling2() {
  static const auto table = [] {
    std::array<std::array<double, kMaxOrder + 1>, kMaxOrder + 1> t{};
    t[0][0] = 1.0;
    for (int s = 1; s <= kMaxOrder; ++s) {
      for (int p = 1; p <= s; ++p) {
        t[s][p] = p * t[s - 1][p] + t[s - 1][p - 1];
      }
    }
    return t;
  }();
  return table;
}

const std::array<double, kMaxOrder + 2>& factorials() {
  static const auto table = [] {
    std::array<double, kMaxOrder + 2> t{};
    t[0] = 1.0;
    for (int k = 1; k <= kMaxOrder + 1; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

}  // namespace

double Angle::reduce(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod can land exactly on 2pi after the add
  return r;
}

double Angle::distance(double a, double b) {
  double d = std::fabs(reduce(a) - reduce(b));
  return d > kTwoPi / 2 ? kTwoPi - d : d;
}

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {
  if (zeros_.empty()) {
    throw ValidationError("BlaschkeProduct: zero list must be nonempty");
  }
  for (const cplx& lam : zeros_) {
    double r = std::abs(lam);
    if (!(r > 0.0) || !(r < 1.0)) {
      throw ValidationError("BlaschkeProduct: zeros must satisfy 0 < |lambda| < 1");
    }
  }
}

BlaschkeProduct BlaschkeProduct::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("zeros") || !j["zeros"].is_array()) {
    throw ValidationError("BlaschkeProduct JSON: missing \"zeros\" array");
  }
  std::vector<cplx> zs;
  for (const auto& z : j["zeros"]) {
    if (!z.contains("re") || !z.contains("im")) {
      throw ValidationError("BlaschkeProduct JSON: zero entries need \"re\" and \"im\"");
    }
    zs.emplace_back(z["re"].get<double>(), z["im"].get<double>());
  }
  return BlaschkeProduct(std::move(zs));
}

std::string BlaschkeProduct::to_json_text() const {
  nlohmann::json j;
  j["zeros"] = nlohmann::json::array();
  for (const cplx& lam : zeros_) {
    j["zeros"].push_back({{"re", lam.real()}, {"im", lam.imag()}});
  }
  return j.dump();
}

cplx eval_boundary(const BlaschkeProduct& B, Angle theta) {
  const cplx z = std::polar(1.0, theta.radians());
  cplx out(1.0, 0.0);
  for (const cplx& lam : B.zeros()) {
    out *= (z - lam) / (1.0 - std::conj(lam) * z);
  }
  return out;
}

double psi_prime(const BlaschkeProduct& B, Angle theta) {
  double sum = 0.0;
  for (const cplx& lam : B.zeros()) {
    const double rho = std::abs(lam);
    const double tj = std::arg(lam);
    sum += (1.0 - rho * rho) /
           (1.0 + rho * rho - 2.0 * rho * std::cos(theta.radians() - tj));
  }
  return sum;
}

int max_psi_derivative_order() { return kMaxOrder; }

double psi_derivative(const BlaschkeProduct& B, Angle theta, int order) {
  if (order < 1 || order > kMaxOrder) {
    throw ParameterOutOfRange("psi_derivative: order must be in [1, " +
                              std::to_string(kMaxOrder) + "]");
  }
  if (order == 1) return psi_prime(B, theta);

  const int s = order - 1;  // apply (i u d/du)^s to (1-u)^{-1}
  const auto& S2 = stirling2();
  const auto& fact = factorials();
  // i^s cycles 1, i, -1, -i.
  static const cplx ipow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  const cplx is = ipow[s % 4];

  double total = 0.0;
  const cplx eith = std::polar(1.0, theta.radians());
  for (const cplx& lam : B.zeros()) {
    const cplx u = std::conj(lam) * eith;
    const cplx one_minus = 1.0 - u;
    cplx up = u;                       // u^p
    cplx dp = one_minus * one_minus;   // (1-u)^{p+1}
    cplx acc(0.0, 0.0);
    for (int p = 1; p <= s; ++p) {
      acc += S2[s][p] * fact[p] * up / dp;
      up *= u;
      dp *= one_minus;
    }
    total += 2.0 * (is * acc).real();
  }
  return total;
}

double psi_phase(const BlaschkeProduct& B, Angle theta) {
  const double anchor = std::arg(eval_boundary(B, Angle(0.0)));
  const double t = theta.radians();
  if (t == 0.0) return anchor;
  auto integrand = [&B](double x) { return psi_prime(B, Angle(x)); };
  double err = 0.0;
  double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, t, 12, 1e-12, &err);
  return anchor + integral;
}

double max_psi_prime(const BlaschkeProduct& B) {
  const int G = std::max(4096, 256 * B.degree());
  double best = 0.0;
  for (int i = 0; i < G; ++i) {
    best = std::max(best, psi_prime(B, Angle(kTwoPi * i / G)));
  }
  return best;
}

}  // namespace blaschke
