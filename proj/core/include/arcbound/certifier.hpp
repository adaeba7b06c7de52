#pragma once

#include <utility>
#include <vector>

#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

// The bound-minus-arcsin difference at x=1 transplanted to u through
// x = cos t, t = 4 arctan u, which maps x in [0,1] onto u in [0, sqrt(2)-1]
// (reversing orientation: u=0 is x=1) and turns the difference into
//   w(u) = sqrt(2)(b+2)(u^2+2u-1) / ((sqrt(2)-b)u^2 - 2 sqrt(2) u - b - sqrt(2))
//          - pi/2 + 4 arctan u.
// Throws std::domain_error for u outside [0, sqrt(2)-1],
// std::invalid_argument for b <= 0, SingularDenominatorError if the
// rational part's denominator vanishes (it has no roots in the interval
// for any b > 0, so this signals corrupted inputs).
Real w_eval(const Real& u, const Real& b, const PrecisionConfig& prec);

// dw/du as the closed-form rational function: a quartic in u over
// (u^2+1)((b-sqrt(2))u^2 + 2 sqrt(2) u + b + sqrt(2))^2.
// Same domain and errors as w_eval.
Real w_prime(const Real& u, const Real& b, const PrecisionConfig& prec);

struct CriticalPoint {
  Real u;
  // |w'(u)| after polishing.
  Real residual;
  // Lies inside [0, sqrt(2)-1].
  bool inside = false;
  // No sign change of w' across the point (even multiplicity).
  bool double_root = false;
};

// Stationary points of w: the closed-form quartic roots
//   u_{1,4} = (2 sqrt(2) -+ sqrt(-b^4+4b^3+4b^2-16b)) / (b^2-2b+2 sqrt(2)-4)
// and the parameter-independent double root u = sqrt(2)-1, each polished
// by a local bisection of w' where a sign change exists. Sorted ascending.
// Throws ComplexRootError when the radicand is negative,
// std::invalid_argument for b <= 0.
std::vector<CriticalPoint> critical_points(const Real& b, const PrecisionConfig& prec);

struct NonnegCertificate {
  Real b;
  Real interval_lo;
  Real interval_hi;
  // Stationary points strictly inside the interval.
  std::vector<Real> critical_points;
  std::pair<Real, Real> endpoint_values;
  // w at each interior stationary point, same order.
  std::vector<Real> extremum_values;
  Real min_value;
  // Where the minimum over all probed points was taken.
  Real min_location;
  bool verdict = false;
  int precision_used = 0;
};

// Establishes w(u) >= 0 on [0, sqrt(2)-1] for the given b by evaluating w
// at the endpoints, at every interior stationary point, and at midpoints
// between consecutive probe points as sign sentinels. verdict is true when
// the minimum stays above minus the certification tolerance; a failure is
// reported through verdict=false and min_location, not an exception.
NonnegCertificate certify_upper_bound(const Real& b, const PrecisionConfig& prec);

struct LowerCounterexample {
  // Sign-change abscissa of g on (0, 1).
  Real c_b;
  // Probe point c_b/2.
  Real xi;
  Real g_xi;
};

// For b in (b1, 4): g(0) = (4-b)/(24(2+b)) > 0 while g(1) < 0, so the
// family member exceeds arcsin near 0 and undershoots it near 1. Locates
// the sign change by bisection and returns the positive-side probe.
// Throws std::invalid_argument for b outside (b1, 4), CertificationError
// if a sign condition fails at the working precision.
LowerCounterexample lower_counterexample(const Real& b, const PrecisionConfig& prec);

namespace detail {

// w and w' at an explicit width with no domain restriction on u; root
// polishing needs w' just outside the interval.
Real w_eval_bits(const Real& u, const Real& b, mpfr_prec_t bits);
Real w_prime_bits(const Real& u, const Real& b, mpfr_prec_t bits);
// Numerator quartic of w' alone; its sign is the sign of w' wherever the
// denominator is positive.
Real w_prime_numerator_bits(const Real& u, const Real& b, mpfr_prec_t bits);

}  // namespace detail

}  // namespace arcbound
