#pragma once

#include "arcbound/bounds.hpp"
#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

// Residuals of the two matching conditions at x=0: value against arcsin(0)=0
// and first derivative against arcsin'(0)=1. Both vanish exactly when
// alpha = beta + 2.
struct MatchResiduals {
  Real value_residual;
  Real derivative_residual;
};

MatchResiduals match_at_zero(const Real& alpha, const Real& beta,
                             const PrecisionConfig& prec);

// Derivative of (matched family at beta) - arcsin at x=0, both as the
// closed form and as a finite-difference estimate.
struct DiscrepancyReport {
  int order = 0;
  Real beta;
  Real analytic;
  Real numeric;
  Real abs_diff;
};

// Closed forms: 0 for orders 0, 1, 2, 4; (4-beta)/(4(2+beta)) for order 3;
// 3(128+18*beta-13*beta^2)/(16(2+beta)^2) for order 5.
// Throws std::invalid_argument for orders outside [0, 5] or beta <= 0.
DiscrepancyReport discrepancy(int order, const Real& beta,
                              const PrecisionConfig& prec);

// Solves f_b(1) = sqrt(2)(b+2)/(b+sqrt(2)) = target for b > 0, by bracketed
// bisection plus a secant polish, cross-checked against the exact inverse
// b = sqrt(2)(2-target)/(target-sqrt(2)).
// Throws std::invalid_argument for target outside (0, pi/2];
// NoSolutionError when the target is not attained over b > 0 (the map's
// range is the open interval (sqrt(2), 2)); CertificationError if the two
// computations disagree.
Real solve_endpoint(const Real& target, const PrecisionConfig& prec);
// Same with the default target pi/2.
Real solve_endpoint(const PrecisionConfig& prec);

// (f_b(x) - arcsin x) / x^3 for the matched family, continuous at 0 where
// the quotient tends to (4-b)/(24(2+b)); that closed form is returned for
// x < 2^-20 where the direct quotient would cancel catastrophically.
Real g_eval(const Real& b, const Real& x, const PrecisionConfig& prec);

struct OptimalityReport {
  Real b1;
  Real endpoint_residual;
  struct UpperWitness {
    Real b;
    Real x;
    Real gap;
  } upper_strictness_witness;
  struct LowerWitness {
    Real b;
    Real xi;
    Real g_xi;
  } lower_counterexample;
};

// Evidence that the matched family admits no better parameter than the
// endpoint solution: the endpoint residual at b1, a b > b1 whose value at
// x=1 falls short of pi/2, and a b in (b1, 4) where g takes a positive
// value before its sign change.
// Throws CertificationError if any sign condition fails.
OptimalityReport optimality_report(const PrecisionConfig& prec);

}  // namespace arcbound
