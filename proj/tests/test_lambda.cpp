#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "arcbound/errors.hpp"
#include "arcbound/lambda.hpp"
#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

using namespace arcbound;

namespace {

const PrecisionConfig kPrec{128};

// sqrt(2)(4-pi)/(pi-2 sqrt(2)), summed independently with mpmath.
constexpr const char* kEndpointBeta =
    "3.87645254513397913235186527265606590425065046";
// Third-derivative discrepancy (4-beta)/(4(2+beta)) at that beta.
constexpr const char* kThirdAtEndpointBeta =
    "0.00525603899279016765516517641208";
// (4 - 3.9)/(24 (2 + 3.9)) = 1/1416.
constexpr const char* kCubicLimitAt39 =
    "0.000706214689265536723163841807909604519774";
// Matched family at beta=4 evaluated at x=1.
constexpr const char* kLowerAtOne =
    "1.567223249782448655088609241502339563262";

Real frozen(const char* text) { return Real::from_decimal(text, 256); }

}  // namespace

TEST_CASE("matching conditions vanish exactly on alpha = beta + 2") {
  for (double beta : {0.7, 2.0, 4.0, 9.5}) {
    const Real b(beta, 160);
    const MatchResiduals r = match_at_zero(b + 2L, b, kPrec);
    CAPTURE(beta);
    CHECK(r.value_residual.sign() == 0);
    CHECK(r.derivative_residual < kPrec.derivative_tolerance());
  }
}

TEST_CASE("derivative residual off the matched line is 1/(beta+2)") {
  const Real beta(4L, 160);
  const MatchResiduals r = match_at_zero(beta + 1L, beta, kPrec);
  CHECK(r.value_residual.sign() == 0);
  const Real expected = Real(1L, 160) / 6L;
  CHECK(abs(r.derivative_residual - expected) < Real::from_decimal("1e-20", 64));
}

TEST_CASE("match_at_zero rejects nonpositive parameters") {
  CHECK_THROWS_AS((void)match_at_zero(Real(-1L, 64), Real(4L, 64), kPrec),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)match_at_zero(Real(6L, 64), Real(0L, 64), kPrec),
                  std::invalid_argument);
}

TEST_CASE("discrepancies of orders 0 1 2 4 vanish") {
  for (int order : {0, 1, 2, 4}) {
    for (double beta : {0.9, 3.3, 7.5}) {
      CAPTURE(order);
      CAPTURE(beta);
      const DiscrepancyReport rep = discrepancy(order, Real(beta, 160), kPrec);
      CHECK(rep.analytic.sign() == 0);
      CHECK(abs(rep.numeric) < Real::from_decimal("1e-12", 64));
    }
  }
}

TEST_CASE("third order discrepancy at the endpoint parameter") {
  const DiscrepancyReport rep =
      discrepancy(3, frozen(kEndpointBeta).round_to(160), kPrec);
  CHECK(abs(rep.analytic - frozen(kThirdAtEndpointBeta)) <
        Real::from_decimal("1e-28", 64));
  CHECK(rep.abs_diff < Real::from_decimal("1e-10", 64));
  CHECK(abs(rep.analytic - rep.numeric) == rep.abs_diff);
}

TEST_CASE("fifth order discrepancy at beta 4 is minus one twenty fourth") {
  const DiscrepancyReport rep = discrepancy(5, Real(4L, 160), kPrec);
  const Real expected = Real(-1L, 256) / 24L;
  CHECK(abs(rep.analytic - expected) < Real::pow2(-120, 64));
  CHECK(rep.abs_diff < Real::from_decimal("1e-6", 64));
}

TEST_CASE("discrepancy order range stops at five") {
  CHECK_THROWS_WITH_AS((void)discrepancy(6, Real(4L, 64), kPrec),
                       doctest::Contains("fifth derivative"),
                       std::invalid_argument);
  CHECK_THROWS_AS((void)discrepancy(-1, Real(4L, 64), kPrec),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)discrepancy(3, Real(-2L, 64), kPrec),
                  std::invalid_argument);
}

TEST_CASE("endpoint solve reproduces the closed form parameter") {
  const Real b = solve_endpoint(kPrec);
  CHECK(abs(b - frozen(kEndpointBeta)) < Real::pow2(-120, 64));
  CHECK(b.bits() == 128);
}

TEST_CASE("endpoint solve inverts a known endpoint value") {
  const Real b = solve_endpoint(frozen(kLowerAtOne).round_to(160), kPrec);
  CHECK(abs(b - Real(4L, 128)) < Real::from_decimal("1e-36", 64));
}

TEST_CASE("endpoint solve input screening") {
  CHECK_THROWS_AS((void)solve_endpoint(Real(0L, 160), kPrec),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)solve_endpoint(Real(-1L, 160), kPrec),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)solve_endpoint(Real(2L, 160), kPrec),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)solve_endpoint(Real(), kPrec), std::invalid_argument);
  // Targets at or below sqrt(2) sit under the range of the endpoint map.
  CHECK_THROWS_AS((void)solve_endpoint(Real(1.2, 160), kPrec), NoSolutionError);
  CHECK_THROWS_AS((void)solve_endpoint(Real::sqrt2(160), kPrec),
                  NoSolutionError);
}

TEST_CASE("cubic quotient is continuous across the small x switch") {
  const Real b = frozen(kEndpointBeta).round_to(160);
  const Real below = g_eval(b, Real::pow2(-24, 160), kPrec);
  const Real above = g_eval(b, Real::pow2(-18, 160), kPrec);
  const Real at_zero = g_eval(b, Real(0L, 160), kPrec);
  CHECK(below == at_zero);
  CHECK(abs(above - at_zero) < Real::from_decimal("1e-9", 64));
}

TEST_CASE("cubic quotient limit at beta 3.9") {
  const Real b = Real::from_decimal("3.9", 160);
  const Real g0 = g_eval(b, Real(0L, 160), kPrec);
  CHECK(abs(g0 - frozen(kCubicLimitAt39)) < Real::pow2(-130, 64));
  CHECK(g0 > Real(0L, 64));
}

TEST_CASE("cubic quotient domain") {
  const Real b(4L, 160);
  CHECK_THROWS_AS((void)g_eval(b, Real(-0.1, 160), kPrec), std::domain_error);
  CHECK_THROWS_AS((void)g_eval(b, Real(1.1, 160), kPrec), std::domain_error);
  CHECK_THROWS_AS((void)g_eval(Real(0L, 160), Real(0.5, 160), kPrec),
                  std::invalid_argument);
}

TEST_CASE("optimality evidence") {
  const OptimalityReport rep = optimality_report(kPrec);
  CHECK(abs(rep.b1 - frozen(kEndpointBeta)) < Real::pow2(-120, 64));
  CHECK(rep.endpoint_residual < Real::pow2(-110, 64));

  CHECK(rep.upper_strictness_witness.b > rep.b1);
  CHECK(rep.upper_strictness_witness.x == Real(1L, 64));
  CHECK(rep.upper_strictness_witness.gap > Real(0L, 64));

  CHECK(rep.lower_counterexample.b > rep.b1);
  CHECK(rep.lower_counterexample.b < Real(4L, 64));
  CHECK(rep.lower_counterexample.xi > Real(0L, 64));
  CHECK(rep.lower_counterexample.xi < Real(1L, 64));
  CHECK(rep.lower_counterexample.g_xi > Real(0L, 64));
}
