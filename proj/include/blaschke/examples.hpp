#ifndef BLASCHKE_EXAMPLES_HPP
#define BLASCHKE_EXAMPLES_HPP

#include <optional>
#include <string>

#include "blaschke/blaschke_product.hpp"

namespace blaschke {

/// Parameters of one of the extremal families. Side conditions are validated
/// at construction, never assumed.
struct ExampleSpec {
  enum class Family { kGeneralN, kDeg2Conjugate, kDeg2Real, kDeg4 };

  Family family = Family::kGeneralN;
  int N = 3;                      // general_N
  std::optional<double> t;        // general_N; empty -> per-N default
  cplx w{2.0, 1.0};               // deg2_conjugate
  double w1 = 0.0, w2 = 0.0;      // deg2_real
  cplx w1c, w2c;                  // deg4

  int expected_N() const;

  /// {"family": "...", "params": {...}}; omitted params fall back to the
  /// built-in reference parameters of the family.
  static ExampleSpec from_json_text(const std::string& text);
};

struct ConstructionReport {
  double t_used = 0.0;
  int retries = 0;
};

/// Degree-N product with zeros conj(zeta u^j)/(1 + conj(zeta u^j)),
/// u = e^{2 pi i/N}, zeta = t e^{i pi (N-1)/(2N)}. Requires N >= 3 and
/// 0 < t < 1/(2 pi).
BlaschkeProduct construct_general(int N, double t);

/// construct_general with the per-N default t, re-validated at runtime: the
/// phase portrait must report exponent N, else t is halved (up to 6 retries).
BlaschkeProduct construct_general(int N, ConstructionReport* report = nullptr);

double default_general_t(int N);

/// Degree-2 product with zeros (w-1)/(w+1), (conj(w)-1)/(conj(w)+1).
/// Conditions: Re w > 0, w != 1, Re w = Re w^3 != Re w^5,
/// Re w^{-1} != Re w^{-3}.
BlaschkeProduct construct_deg2_conjugate(cplx w);

/// Degree-2 product with real zeros (w_j-1)/(w_j+1), w_j in (0,inf)\{1}.
/// Conditions: w1+w2 = w1^3+w2^3 != w1^5+w2^5, w1^{-1}+w2^{-1} != w1^{-3}+w2^{-3}.
BlaschkeProduct construct_deg2_real(double w1, double w2);

/// Degree-4 product from w1, w2 (Re > 0, != 1) and their conjugates.
/// Conditions: Re(w1+w2) = Re(w1^3+w2^3) = Re(w1^5+w2^5) != Re(w1^7+w2^7),
/// Re(w1^{-1}+w2^{-1}) != Re(w1^{-3}+w2^{-3}).
BlaschkeProduct construct_deg4(cplx w1, cplx w2);

BlaschkeProduct construct_from_spec(const ExampleSpec& spec,
                                    ConstructionReport* report = nullptr);

/// Reference parameter sets, validated in exact quadratic-surd arithmetic.
BlaschkeProduct example_deg2_conjugate_reference();  // w = 2+i
BlaschkeProduct example_deg2_real_reference();       // w1 = 1/2, w2 = (1+sqrt(13))/4
BlaschkeProduct example_deg4_reference();            // w1 = 1+2i/sqrt3, w2 = 2+i/sqrt3

}  // namespace blaschke

#endif
