#include <doctest.h>

#include <cmath>

#include "blaschke/examples.hpp"
#include "blaschke/phase_analysis.hpp"

using namespace blaschke;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<BlaschkeProduct> portrait_suite() {
  return {BlaschkeProduct({cplx(0.5, 0.0)}),
          example_deg2_conjugate_reference(),
          example_deg2_real_reference(),
          example_deg4_reference(),
          construct_general(3, 0.12),
          construct_general(4, 0.14),
          construct_general(5, 0.12)};
}

}  // namespace

TEST_SUITE_BEGIN("phase_analysis");

TEST_CASE("single real factor has order-3 points at 0 and pi") {
  BlaschkeProduct B({cplx(0.5, 0.0)});
  auto pts = find_critical_points(B, 4096, 1e-6);
  REQUIRE(pts.size() == 2);
  CHECK(Angle(pts[0].xi).almost_equal(Angle(0.0), 1e-9));
  CHECK(Angle(pts[1].xi).almost_equal(Angle(kPi), 1e-9));
  CHECK(pts[0].multiplicity_order == 3);
  CHECK(pts[1].multiplicity_order == 3);

  PhasePortrait p = classify(B, pts);
  CHECK(p.N == 3);
  REQUIRE(p.classes.size() == 2);  // psi' values 3 and 1/3
  CHECK(p.D == 1);
  // the pi point carries the larger amplitude (|psi'''| = 4/27 vs 12)
  CHECK(Angle(p.points[p.representative].xi).almost_equal(Angle(kPi), 1e-9));
  CHECK(p.points[p.representative].psi_prime_value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("reference degree-2 product: N = 5 at xi = 0") {
  BlaschkeProduct B = example_deg2_conjugate_reference();
  PhasePortrait p = analyze(B);
  CHECK(p.N == 5);
  CHECK(p.D == 1);
  REQUIRE(p.dominant.size() == 1);
  CHECK(Angle(p.points[p.dominant[0]].xi).almost_equal(Angle(0.0), 1e-9));
  CHECK(p.points[p.dominant[0]].psi_N_value == doctest::Approx(-120.0).epsilon(1e-9));
}

TEST_CASE("reference degree-4 product: N = 7 at xi = 0") {
  PhasePortrait p = analyze(example_deg4_reference());
  CHECK(p.N == 7);
  REQUIRE(p.dominant.size() == 1);
  CHECK(Angle(p.points[p.dominant[0]].xi).almost_equal(Angle(0.0), 1e-8));
  CHECK(p.points[p.dominant[0]].psi_N_value == doctest::Approx(1120.0).epsilon(1e-9));
}

TEST_CASE("antipodal symmetric product pairs up classes") {
  // zeros {lambda, -lambda}: psi' is pi-periodic, so critical points come in
  // (xi, xi+pi) pairs with equal psi' values and orders
  BlaschkeProduct B({cplx(0.6, 0.0), cplx(-0.6, 0.0)});
  PhasePortrait p = analyze(B);
  CHECK(p.N == 3);
  CHECK(p.D == 2);
  bool found_pair = false;
  for (const auto& cls : p.classes) {
    if (cls.size() == 2) {
      found_pair = true;
      CHECK(Angle::distance(p.points[cls[0]].xi + kPi, p.points[cls[1]].xi) < 1e-8);
    }
  }
  CHECK(found_pair);
}

TEST_CASE("returned points are zeros of psi''") {
  for (const auto& B : portrait_suite()) {
    auto pts = find_critical_points(B, std::max(4096, 256 * B.degree()), 1e-6);
    double scale = 0.0;
    const int G = 4096;
    for (int i = 0; i < G; ++i) {
      scale = std::max(scale, std::fabs(psi_derivative(B, Angle(kTwoPi * i / G), 2)));
    }
    for (const auto& cp : pts) {
      CHECK(std::fabs(psi_derivative(B, Angle(cp.xi), 2)) < 1e-9 * scale);
      CHECK(cp.multiplicity_order >= 3);
      CHECK(cp.psi_N_value != 0.0);
    }
  }
}

TEST_CASE("psi'' keeps constant sign between consecutive roots") {
  for (const auto& B : portrait_suite()) {
    const int G = std::max(4096, 256 * B.degree());
    auto pts = find_critical_points(B, G, 1e-6);
    REQUIRE(!pts.empty());
    const double h = kTwoPi / G;
    // sample strictly inside each arc between consecutive roots
    for (size_t a = 0; a < pts.size(); ++a) {
      const double lo = pts[a].xi;
      const double hi = a + 1 < pts.size() ? pts[a + 1].xi : pts[0].xi + kTwoPi;
      int sign = 0;
      for (double th = lo + 2 * h; th < hi - 2 * h; th += h) {
        const double v = psi_derivative(B, Angle(th), 2);
        if (std::fabs(v) < 1e-12) continue;
        const int s = v > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        CHECK(s == sign);
      }
    }
  }
}

TEST_CASE("portraits are stable under grid refinement") {
  for (const auto& B : portrait_suite()) {
    const int G = std::max(4096, 256 * B.degree());
    auto coarse = find_critical_points(B, G, 1e-6);
    auto fine = find_critical_points(B, 2 * G, 1e-7);
    REQUIRE(coarse.size() == fine.size());
    for (size_t i = 0; i < coarse.size(); ++i) {
      CHECK(Angle::distance(coarse[i].xi, fine[i].xi) < 1e-8);
      CHECK(coarse[i].multiplicity_order == fine[i].multiplicity_order);
    }
  }
}

TEST_CASE("expected exponents across the example suite") {
  CHECK(analyze(BlaschkeProduct({cplx(0.5, 0.0)})).N == 3);
  CHECK(analyze(example_deg2_conjugate_reference()).N == 5);
  CHECK(analyze(example_deg2_real_reference()).N == 5);
  CHECK(analyze(example_deg4_reference()).N == 7);
}

TEST_CASE("validation and error paths") {
  BlaschkeProduct B({cplx(0.5, 0.0)});
  CHECK_THROWS_AS(find_critical_points(B, 100, 1e-6), ParameterOutOfRange);
  CHECK_THROWS_AS(find_critical_points(B, 4096, 0.0), ParameterOutOfRange);
  CHECK_THROWS_AS(classify(B, {}), EmptyPortrait);
}

TEST_CASE("portrait JSON carries the declared fields") {
  PhasePortrait p = analyze(example_deg2_conjugate_reference());
  const std::string j = p.to_json_text();
  CHECK(j.find("\"points\"") != std::string::npos);
  CHECK(j.find("\"xi\"") != std::string::npos);
  CHECK(j.find("\"order\"") != std::string::npos);
  CHECK(j.find("\"psi_prime\"") != std::string::npos);
  CHECK(j.find("\"psi_N\"") != std::string::npos);
  CHECK(j.find("\"N\"") != std::string::npos);
  CHECK(j.find("\"D\"") != std::string::npos);
  CHECK(j.find("\"dominant\"") != std::string::npos);
}

TEST_SUITE_END();
