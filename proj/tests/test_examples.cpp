#include <doctest.h>

#include <cmath>

#include "blaschke/examples.hpp"
#include "blaschke/phase_analysis.hpp"
#include "blaschke/surd.hpp"

using namespace blaschke;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE_BEGIN("examples");

TEST_CASE("general construction stays in the punctured disk") {
  for (int N : {3, 4, 5, 8}) {
    BlaschkeProduct B = construct_general(N, 0.05);
    CHECK(B.degree() == N);
    for (const cplx& lam : B.zeros()) {
      CHECK(std::abs(lam) > 0.0);
      CHECK(std::abs(lam) < 1.0);
    }
  }
  CHECK_THROWS_AS(construct_general(2, 0.05), ParameterOutOfRange);
  CHECK_THROWS_AS(construct_general(3, 0.0), ParameterOutOfRange);
  CHECK_THROWS_AS(construct_general(3, 0.2), ParameterOutOfRange);
}

TEST_CASE("general N=3 pins an order-3 critical point at 0") {
  BlaschkeProduct B = construct_general(3, 0.1);
  PhasePortrait p = analyze(B);
  CHECK(p.N == 3);
  bool at_zero = false;
  for (const auto& cp : p.points) {
    if (Angle(cp.xi).almost_equal(Angle(0.0), 1e-7)) {
      at_zero = true;
      CHECK(cp.multiplicity_order == 3);
    }
  }
  CHECK(at_zero);
}

TEST_CASE("default-t construction validates the portrait exponent") {
  for (int N : {3, 4, 5}) {
    ConstructionReport rep;
    BlaschkeProduct B = construct_general(N, &rep);
    CHECK(rep.retries == 0);
    CHECK(rep.t_used == default_general_t(N));
    CHECK(analyze(B).N == N);
  }
}

TEST_CASE("degree-2 conjugate example: reference values") {
  BlaschkeProduct B = construct_deg2_conjugate(cplx(2.0, 1.0));
  REQUIRE(B.degree() == 2);
  CHECK(std::abs(B.zeros()[0] - cplx(0.4, 0.2)) < 1e-15);
  CHECK(std::abs(B.zeros()[1] - cplx(0.4, -0.2)) < 1e-15);

  BlaschkeProduct ref = example_deg2_conjugate_reference();
  CHECK(std::abs(ref.zeros()[0] - cplx(0.4, 0.2)) == 0.0);
}

TEST_CASE("degree-2 conjugate example: rejections") {
  // Re(w^3) = -2 != Re(w) = 1
  CHECK_THROWS_AS(construct_deg2_conjugate(cplx(1.0, 1.0)), ConditionViolated);
  CHECK_THROWS_AS(construct_deg2_conjugate(cplx(-2.0, 1.0)), ConditionViolated);
  CHECK_THROWS_AS(construct_deg2_conjugate(cplx(1.0, 0.0)), ConditionViolated);
}

TEST_CASE("degree-2 real example: reference values") {
  const double w2 = (1.0 + std::sqrt(13.0)) / 4.0;
  BlaschkeProduct B = construct_deg2_real(0.5, w2);
  CHECK(std::abs(B.zeros()[0] - cplx(-1.0 / 3.0, 0.0)) < 1e-15);
  const double lam2 = (std::sqrt(13.0) - 3.0) / (std::sqrt(13.0) + 5.0);
  CHECK(std::abs(B.zeros()[1] - cplx(lam2, 0.0)) < 1e-15);

  CHECK_THROWS_AS(construct_deg2_real(2.0, 2.0), ConditionViolated);
  CHECK_THROWS_AS(construct_deg2_real(-0.5, 2.0), ConditionViolated);
}

TEST_CASE("degree-4 example: reference values and rejection") {
  BlaschkeProduct B =
      construct_deg4(cplx(1.0, 2.0 / std::sqrt(3.0)), cplx(2.0, 1.0 / std::sqrt(3.0)));
  CHECK(B.degree() == 4);
  CHECK_THROWS_AS(construct_deg4(cplx(2.0, 0.0), cplx(2.0, 0.0)), ConditionViolated);

  BlaschkeProduct ref = example_deg4_reference();
  REQUIRE(ref.degree() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(ref.zeros()[j] - B.zeros()[j]) < 1e-15);
  }
}

TEST_CASE("exact arithmetic reproduces the displayed side conditions") {
  // w = 2 + i in Q(i)
  const Surd w(Rational(2), Rational(1), -1);
  CHECK(w.pow(3).real_part() == Rational(2));
  CHECK(w.pow(5).real_part() == Rational(-38));
  CHECK(w.pow(-1).real_part() == Rational(2, 5));
  CHECK(w.pow(-3).real_part() == Rational(2, 125));

  // w1 = 1/2, w2 = (1+sqrt13)/4 in Q(sqrt 13)
  const Surd w1 = Surd::rational(Rational(1, 2), 13);
  const Surd w2(Rational(1, 4), Rational(1, 4), 13);
  const Surd s1 = w1 + w2;
  CHECK(s1 == Surd(Rational(3, 4), Rational(1, 4), 13));  // (3+sqrt13)/4
  CHECK(w1.pow(3) + w2.pow(3) == s1);
  CHECK(w1.pow(5) + w2.pow(5) == Surd(Rational(63, 64), Rational(19, 64), 13));
  CHECK(w1.pow(-1) + w2.pow(-1) == Surd(Rational(5, 3), Rational(1, 3), 13));
  CHECK(w1.pow(-3) + w2.pow(-3) == Surd(Rational(176, 27), Rational(16, 27), 13));

  // w1 = 1 + (2/3) sqrt(-3), w2 = 2 + (1/3) sqrt(-3)
  const Surd v1(Rational(1), Rational(2, 3), -3);
  const Surd v2(Rational(2), Rational(1, 3), -3);
  auto re_sum = [&](int k) { return v1.pow(k).real_part() + v2.pow(k).real_part(); };
  CHECK(re_sum(1) == Rational(3));
  CHECK(re_sum(3) == Rational(3));
  CHECK(re_sum(5) == Rational(3));
  CHECK(re_sum(7) == Rational(-421, 9));
  CHECK(re_sum(-1) == Rational(81, 91));
  CHECK(re_sum(-3) == Rational(-122391, 753571));
}

TEST_CASE("psi'''(pi) stays away from zero for the degree-2 examples") {
  BlaschkeProduct e1 = example_deg2_conjugate_reference();
  const double v1 = psi_derivative(e1, Angle(kPi), 3);
  CHECK(std::fabs(v1) > 1e-9);
  CHECK(v1 == doctest::Approx(48.0 / 125.0).epsilon(1e-10));

  BlaschkeProduct e2 = example_deg2_real_reference();
  const double v2 = psi_derivative(e2, Angle(kPi), 3);
  CHECK(std::fabs(v2) > 1e-9);
  CHECK(v2 == doctest::Approx(-(131.0 + 7.0 * std::sqrt(13.0)) / 54.0).epsilon(1e-10));
}

TEST_CASE("every constructed family reports its expected exponent") {
  CHECK(analyze(construct_general(3, default_general_t(3))).N == 3);
  CHECK(analyze(example_deg2_conjugate_reference()).N == 5);
  CHECK(analyze(example_deg2_real_reference()).N == 5);
  CHECK(analyze(example_deg4_reference()).N == 7);
}

TEST_CASE("example spec JSON parsing") {
  ExampleSpec g = ExampleSpec::from_json_text(
      R"({"family": "general_N", "params": {"N": 4, "t": 0.1}})");
  CHECK(g.family == ExampleSpec::Family::kGeneralN);
  CHECK(g.N == 4);
  REQUIRE(g.t.has_value());
  CHECK(*g.t == 0.1);
  CHECK(g.expected_N() == 4);

  ExampleSpec c = ExampleSpec::from_json_text(R"({"family": "deg2_conjugate"})");
  CHECK(c.expected_N() == 5);
  BlaschkeProduct B = construct_from_spec(c);
  CHECK(std::abs(B.zeros()[0] - cplx(0.4, 0.2)) == 0.0);

  ExampleSpec d = ExampleSpec::from_json_text(R"({"family": "deg4"})");
  CHECK(d.expected_N() == 7);
  CHECK(construct_from_spec(d).degree() == 4);

  CHECK_THROWS_AS(ExampleSpec::from_json_text(R"({"family": "unknown"})"),
                  ValidationError);
  CHECK_THROWS_AS(ExampleSpec::from_json_text(R"({"params": {}})"), ValidationError);
}

TEST_SUITE_END();
