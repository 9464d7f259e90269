#include "blaschke/examples.hpp"

#include <json.hpp>

#include <cmath>

#include "blaschke/phase_analysis.hpp"
#include "blaschke/surd.hpp"

namespace blaschke {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kEqTol = 1e-12;      // equality tolerance, scaled
constexpr double kIneqMargin = 1e-9;  // inequality margin, scaled

double scaled(double x, double y) { return std::max({1.0, std::fabs(x), std::fabs(y)}); }

void require_equal(const char* which, double x, double y) {
  const double r = std::fabs(x - y);
  if (r > kEqTol * scaled(x, y)) throw ConditionViolated(which, r);
}

void require_distinct(const char* which, double x, double y) {
  const double r = std::fabs(x - y);
  if (r <= kIneqMargin * scaled(x, y)) throw ConditionViolated(which, r);
}

cplx mobius_to_disk(cplx w) { return (w - 1.0) / (w + 1.0); }

double re_pow(cplx w, int k) {
  return std::real(std::pow(w, k));
}

// Exact counterparts for the reference parameters.
Surd surd_mobius(const Surd& w) {
  const Surd one = Surd::rational(Rational(1), w.d);
  return (w - one) * (w + one).inverse();
}

void exact_require(bool ok, const char* which) {
  if (!ok) throw ConditionViolated(which, 0.0);
}

}  // namespace

double default_general_t(int N) {
  // Measured so that n * t^N reaches O(10) inside the desk-scale scan window
  // for each N; smaller t leaves B^n in the pre-asymptotic spike regime.
  switch (N) {
    case 4: return 0.14;
    default: return 0.12;
  }
}

BlaschkeProduct construct_general(int N, double t) {
  if (N < 3) throw ParameterOutOfRange("construct_general: N must be >= 3");
  if (!(t > 0.0) || !(t < 1.0 / (2.0 * kPi))) {
    throw ParameterOutOfRange("construct_general: t must lie in (0, 1/(2 pi))");
  }
  const cplx zeta = std::polar(t, kPi * (N - 1) / (2.0 * N));
  std::vector<cplx> zeros;
  zeros.reserve(N);
  for (int j = 1; j <= N; ++j) {
    const cplx u = std::polar(1.0, kTwoPi * j / N);
    const cplx c = std::conj(zeta * u);
    zeros.push_back(c / (1.0 + c));
  }
  return BlaschkeProduct(std::move(zeros));
}

BlaschkeProduct construct_general(int N, ConstructionReport* report) {
  double t = default_general_t(N);
  for (int attempt = 0; attempt <= 6; ++attempt) {
    BlaschkeProduct B = construct_general(N, t);
    const PhasePortrait portrait = analyze(B);
    if (portrait.N == N) {
      if (report) {
        report->t_used = t;
        report->retries = attempt;
      }
      return B;
    }
    t *= 0.5;
  }
  throw MultiplicityOverflow(
      "construct_general: portrait exponent never matched N after t halvings");
}

BlaschkeProduct construct_deg2_conjugate(cplx w) {
  if (!(w.real() > 0.0)) throw ConditionViolated("Re(w) > 0", w.real());
  if (std::abs(w - 1.0) <= kEqTol) throw ConditionViolated("w != 1", std::abs(w - 1.0));
  require_equal("Re(w) = Re(w^3)", re_pow(w, 1), re_pow(w, 3));
  require_distinct("Re(w^3) != Re(w^5)", re_pow(w, 3), re_pow(w, 5));
  require_distinct("Re(w^-1) != Re(w^-3)", re_pow(w, -1), re_pow(w, -3));
  const cplx lam = mobius_to_disk(w);
  return BlaschkeProduct({lam, std::conj(lam)});
}

BlaschkeProduct construct_deg2_real(double w1, double w2) {
  for (double w : {w1, w2}) {
    if (!(w > 0.0)) throw ConditionViolated("w in (0, inf)", w);
    if (std::fabs(w - 1.0) <= kEqTol) throw ConditionViolated("w != 1", std::fabs(w - 1.0));
  }
  auto pow_sum = [&](int k) { return std::pow(w1, k) + std::pow(w2, k); };
  require_equal("w1+w2 = w1^3+w2^3", pow_sum(1), pow_sum(3));
  require_distinct("w1^3+w2^3 != w1^5+w2^5", pow_sum(3), pow_sum(5));
  require_distinct("w1^-1+w2^-1 != w1^-3+w2^-3", pow_sum(-1), pow_sum(-3));
  return BlaschkeProduct({mobius_to_disk(w1), mobius_to_disk(w2)});
}

BlaschkeProduct construct_deg4(cplx w1, cplx w2) {
  for (cplx w : {w1, w2}) {
    if (!(w.real() > 0.0)) throw ConditionViolated("Re(w_j) > 0", w.real());
    if (std::abs(w - 1.0) <= kEqTol) throw ConditionViolated("w_j != 1", std::abs(w - 1.0));
  }
  auto re_sum = [&](int k) { return re_pow(w1, k) + re_pow(w2, k); };
  require_equal("Re(w1+w2) = Re(w1^3+w2^3)", re_sum(1), re_sum(3));
  require_equal("Re(w1^3+w2^3) = Re(w1^5+w2^5)", re_sum(3), re_sum(5));
  require_distinct("Re(w1^5+w2^5) != Re(w1^7+w2^7)", re_sum(5), re_sum(7));
  require_distinct("Re(w1^-1+w2^-1) != Re(w1^-3+w2^-3)", re_sum(-1), re_sum(-3));
  return BlaschkeProduct({mobius_to_disk(w1), mobius_to_disk(std::conj(w1)),
                          mobius_to_disk(w2), mobius_to_disk(std::conj(w2))});
}

BlaschkeProduct example_deg2_conjugate_reference() {
  // w = 2 + i in Q(i)
  const Surd w(Rational(2), Rational(1), -1);
  exact_require(w.pow(1).real_part() == w.pow(3).real_part(), "Re(w) = Re(w^3)");
  exact_require(w.pow(3).real_part() != w.pow(5).real_part(), "Re(w^3) != Re(w^5)");
  exact_require(w.pow(-1).real_part() != w.pow(-3).real_part(),
                "Re(w^-1) != Re(w^-3)");
  const Surd lam = surd_mobius(w);
  const cplx l = lam.to_complex();
  return BlaschkeProduct({l, std::conj(l)});
}

BlaschkeProduct example_deg2_real_reference() {
  // w1 = 1/2, w2 = (1 + sqrt(13))/4 in Q(sqrt 13)
  const Surd w1 = Surd::rational(Rational(1, 2), 13);
  const Surd w2(Rational(1, 4), Rational(1, 4), 13);
  exact_require(w1.pow(1) + w2.pow(1) == w1.pow(3) + w2.pow(3),
                "w1+w2 = w1^3+w2^3");
  exact_require(!(w1.pow(3) + w2.pow(3) == w1.pow(5) + w2.pow(5)),
                "w1^3+w2^3 != w1^5+w2^5");
  exact_require(!(w1.pow(-1) + w2.pow(-1) == w1.pow(-3) + w2.pow(-3)),
                "w1^-1+w2^-1 != w1^-3+w2^-3");
  return BlaschkeProduct({surd_mobius(w1).to_complex(), surd_mobius(w2).to_complex()});
}

BlaschkeProduct example_deg4_reference() {
  // w1 = 1 + (2/3) sqrt(-3), w2 = 2 + (1/3) sqrt(-3)  (i.e. 1 + 2i/sqrt3, 2 + i/sqrt3)
  const Surd w1(Rational(1), Rational(2, 3), -3);
  const Surd w2(Rational(2), Rational(1, 3), -3);
  auto re_sum = [&](int k) { return w1.pow(k).real_part() + w2.pow(k).real_part(); };
  exact_require(re_sum(1) == re_sum(3), "Re(w1+w2) = Re(w1^3+w2^3)");
  exact_require(re_sum(3) == re_sum(5), "Re(w1^3+w2^3) = Re(w1^5+w2^5)");
  exact_require(re_sum(5) != re_sum(7), "Re(w1^5+w2^5) != Re(w1^7+w2^7)");
  exact_require(re_sum(-1) != re_sum(-3), "Re(w1^-1+w2^-1) != Re(w1^-3+w2^-3)");
  const cplx l1 = surd_mobius(w1).to_complex();
  const cplx l2 = surd_mobius(w2).to_complex();
  return BlaschkeProduct({l1, std::conj(l1), l2, std::conj(l2)});
}

int ExampleSpec::expected_N() const {
  switch (family) {
    case Family::kGeneralN: return N;
    case Family::kDeg2Conjugate:
    case Family::kDeg2Real: return 5;
    case Family::kDeg4: return 7;
  }
  return 0;
}

ExampleSpec ExampleSpec::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("family")) throw ValidationError("ExampleSpec: missing \"family\"");
  const std::string fam = j["family"].get<std::string>();
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  auto get_cplx = [&](const char* key) {
    return cplx(params.at(key).at("re").get<double>(),
                params.at(key).at("im").get<double>());
  };

  ExampleSpec spec;
  if (fam == "general_N") {
    spec.family = Family::kGeneralN;
    spec.N = params.value("N", 3);
    if (params.contains("t")) spec.t = params["t"].get<double>();
  } else if (fam == "deg2_conjugate") {
    spec.family = Family::kDeg2Conjugate;
    if (params.contains("w")) spec.w = get_cplx("w");
  } else if (fam == "deg2_real") {
    spec.family = Family::kDeg2Real;
    spec.w1 = params.value("w1", 0.5);
    spec.w2 = params.value("w2", (1.0 + std::sqrt(13.0)) / 4.0);
  } else if (fam == "deg4") {
    spec.family = Family::kDeg4;
    if (params.contains("w1") && params.contains("w2")) {
      spec.w1c = get_cplx("w1");
      spec.w2c = get_cplx("w2");
    } else {
      spec.w1c = cplx(1.0, 2.0 / std::sqrt(3.0));
      spec.w2c = cplx(2.0, 1.0 / std::sqrt(3.0));
    }
  } else {
    throw ValidationError("ExampleSpec: unknown family \"" + fam + "\"");
  }
  return spec;
}

BlaschkeProduct construct_from_spec(const ExampleSpec& spec,
                                    ConstructionReport* report) {
  switch (spec.family) {
    case ExampleSpec::Family::kGeneralN:
      if (spec.t) {
        if (report) {
          report->t_used = *spec.t;
          report->retries = 0;
        }
        return construct_general(spec.N, *spec.t);
      }
      return construct_general(spec.N, report);
    case ExampleSpec::Family::kDeg2Conjugate:
      if (spec.w == cplx(2.0, 1.0)) return example_deg2_conjugate_reference();
      return construct_deg2_conjugate(spec.w);
    case ExampleSpec::Family::kDeg2Real:
      if (spec.w1 == 0.5 && spec.w2 == (1.0 + std::sqrt(13.0)) / 4.0) {
        return example_deg2_real_reference();
      }
      return construct_deg2_real(spec.w1, spec.w2);
    case ExampleSpec::Family::kDeg4:
      if (spec.w1c == cplx(1.0, 2.0 / std::sqrt(3.0)) &&
          spec.w2c == cplx(2.0, 1.0 / std::sqrt(3.0))) {
        return example_deg4_reference();
      }
      return construct_deg4(spec.w1c, spec.w2c);
  }
  throw ValidationError("construct_from_spec: unreachable family");
}

}  // namespace blaschke
