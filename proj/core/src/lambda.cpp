#include "arcbound/lambda.hpp"

#include <stdexcept>

#include "arcbound/certifier.hpp"
#include "arcbound/derivatives.hpp"
#include "arcbound/errors.hpp"
#include "arcbound/oracle.hpp"

namespace arcbound {

namespace {

// f_b(1) = sqrt(2)(b+2)/(b+sqrt(2)), the endpoint value of the matched family.
Real endpoint_value(const Real& b, mpfr_prec_t wp) {
  const Real r2 = Real::sqrt2(wp);
  return r2 * (b + 2) / (b + r2);
}

Real analytic_discrepancy(int order, const Real& beta, mpfr_prec_t wp) {
  const Real bw = beta.round_to(wp);
  switch (order) {
    case 3:
      return (4 - bw) / ((2 + bw).mul_pow2(2));
    case 5: {
      const Real num = 3 * (128 + 18 * bw - 13 * bw * bw);
      const Real den = ((2 + bw) * (2 + bw)).mul_pow2(4);
      return num / den;
    }
    default:
      return Real(0L, wp);
  }
}

}  // namespace

MatchResiduals match_at_zero(const Real& alpha, const Real& beta,
                             const PrecisionConfig& prec) {
  prec.validate();
  const BoundSpec spec = BoundSpec::sqrt_two_param(alpha, beta);
  const mpfr_prec_t wp = prec.working_bits();
  const Real zero(0L, wp);

  MatchResiduals r;
  r.value_residual =
      abs(detail::eval_bound_bits(spec, zero, wp)).round_to(prec.mantissa_bits);
  const DerivativeResult d = numeric_derivative(
      [&](const Real& x) { return detail::eval_bound_bits(spec, x, wp); }, zero, 1,
      prec);
  r.derivative_residual = abs(d.value - Real(1L, wp)).round_to(prec.mantissa_bits);
  return r;
}

DiscrepancyReport discrepancy(int order, const Real& beta,
                              const PrecisionConfig& prec) {
  prec.validate();
  if (order < 0 || order > 5) {
    throw std::invalid_argument(
        "discrepancy: derivative order must be in [0, 5], the matching "
        "conditions stop at the fifth derivative");
  }
  const BoundSpec spec = BoundSpec::sqrt_matched(beta);
  const mpfr_prec_t wp = prec.working_bits();

  DiscrepancyReport rep;
  rep.order = order;
  rep.beta = beta.round_to(prec.mantissa_bits);
  rep.analytic = analytic_discrepancy(order, beta, wp).round_to(prec.mantissa_bits);
  const DerivativeResult d = numeric_derivative(
      [&](const Real& x) {
        return detail::eval_bound_bits(spec, x, wp) - detail::arcsin_bits(x, wp);
      },
      Real(0L, wp), order, prec);
  rep.numeric = d.value;
  rep.abs_diff = abs(rep.analytic - rep.numeric).round_to(prec.mantissa_bits);
  return rep;
}

Real solve_endpoint(const Real& target, const PrecisionConfig& prec) {
  prec.validate();
  const mpfr_prec_t wp = prec.working_bits();
  const Real t = target.round_to(wp);
  const Real r2 = Real::sqrt2(wp);
  const Real half_pi = Real::pi(wp).mul_pow2(-1);

  if (t.is_nan() || !(t > Real(0L, wp)) || t > half_pi) {
    throw std::invalid_argument("solve_endpoint: target must lie in (0, pi/2]");
  }
  // The endpoint map b -> f_b(1) decreases from 2 (b -> 0) to sqrt(2)
  // (b -> infinity); neither limit value is attained.
  if (t <= r2) {
    throw NoSolutionError(
        "solve_endpoint: target at or below sqrt(2), the infimum of the "
        "endpoint map over b > 0");
  }

  const Real closed = r2 * (2 - t) / (t - r2);

  // Bracketed bisection; the map is monotone so one sign change exists
  // whenever the target is in range. Extend the default bracket if the
  // solution sits outside it.
  Real lo = r2 * Real::from_decimal("1e-3", wp);
  Real hi(1000L, wp);
  auto fval = [&](const Real& b) { return endpoint_value(b, wp) - t; };
  int expand = 0;
  while (fval(lo) < Real(0L, wp) && expand < 12) {
    lo = lo / 10;
    ++expand;
  }
  expand = 0;
  while (fval(hi) > Real(0L, wp) && expand < 12) {
    hi = hi * 10;
    ++expand;
  }
  Real flo = fval(lo);
  Real fhi = fval(hi);
  if (!(flo > Real(0L, wp)) || !(fhi < Real(0L, wp))) {
    throw NoSolutionError("solve_endpoint: no sign change over the bracket");
  }
  for (int i = 0; i < 80; ++i) {
    const Real mid = (lo + hi).mul_pow2(-1);
    const Real fm = fval(mid);
    if (fm.sign() >= 0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  // Secant polish from the bracket edges; each step roughly squares the
  // number of correct digits.
  Real b0 = lo, f0 = flo;
  Real b1 = hi, f1 = fhi;
  const Real step_tol = Real::pow2(-(wp - 8), wp);
  for (int i = 0; i < 40; ++i) {
    const Real df = f1 - f0;
    if (df.sign() == 0) break;
    const Real b2 = b1 - f1 * (b1 - b0) / df;
    const Real move = abs(b2 - b1);
    b0 = b1;
    f0 = f1;
    b1 = b2;
    f1 = fval(b2);
    if (move <= step_tol * abs(b1)) break;
  }

  if (abs(b1 - closed) > prec.root_tolerance() * abs(closed)) {
    throw CertificationError(
        "solve_endpoint: root search and exact inverse disagree beyond "
        "tolerance");
  }
  return b1.round_to(prec.mantissa_bits);
}

Real solve_endpoint(const PrecisionConfig& prec) {
  prec.validate();
  return solve_endpoint(Real::pi(prec.working_bits()).mul_pow2(-1), prec);
}

Real g_eval(const Real& b, const Real& x, const PrecisionConfig& prec) {
  prec.validate();
  const BoundSpec spec = BoundSpec::sqrt_matched(b);
  const mpfr_prec_t wp = prec.working_bits();
  const Real xw = x.round_to(wp);
  if (xw.is_nan() || xw.sign() < 0 || xw > Real(1L, wp)) {
    throw std::domain_error("g_eval: x must lie in [0, 1]");
  }
  if (xw < Real::pow2(-20, wp)) {
    // Limit value (4-b)/(24(2+b)); the direct quotient is 0/0 at x=0.
    const Real bw = b.round_to(wp);
    return ((4 - bw) / (24 * (2 + bw))).round_to(prec.mantissa_bits);
  }
  const Real diff = detail::eval_bound_bits(spec, xw, wp) - detail::arcsin_bits(xw, wp);
  return (diff / (xw * xw * xw)).round_to(prec.mantissa_bits);
}

OptimalityReport optimality_report(const PrecisionConfig& prec) {
  prec.validate();
  const mpfr_prec_t wp = prec.working_bits();
  const Real zero(0L, wp);
  const Real half_pi = Real::pi(wp).mul_pow2(-1);

  OptimalityReport rep;
  rep.b1 = solve_endpoint(prec);
  const Real b1w = rep.b1.round_to(wp);
  rep.endpoint_residual =
      abs(endpoint_value(b1w, wp) - half_pi).round_to(prec.mantissa_bits);

  // Any b above b1 undershoots pi/2 at x=1; witness at b1 + 1/10.
  const Real bw = b1w + Real(0.1, wp);
  const Real gap = half_pi - endpoint_value(bw, wp);
  if (!(gap > zero)) {
    throw CertificationError(
        "optimality_report: endpoint gap at b1 + 0.1 is not positive");
  }
  rep.upper_strictness_witness.b = bw.round_to(prec.mantissa_bits);
  rep.upper_strictness_witness.x = Real(1L, prec.mantissa_bits);
  rep.upper_strictness_witness.gap = gap.round_to(prec.mantissa_bits);

  // Midpoint of (b1, 4): g starts positive and ends negative there, so the
  // family member is neither an upper nor a lower bound.
  const Real bmid = (b1w + 4).mul_pow2(-1);
  const LowerCounterexample ce = lower_counterexample(bmid, prec);
  if (!(ce.g_xi > Real(0L, prec.mantissa_bits))) {
    throw CertificationError(
        "optimality_report: g at the counterexample point is not positive");
  }
  rep.lower_counterexample.b = bmid.round_to(prec.mantissa_bits);
  rep.lower_counterexample.xi = ce.xi;
  rep.lower_counterexample.g_xi = ce.g_xi;
  return rep;
}

}  // namespace arcbound
