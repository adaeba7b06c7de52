#include "arcbound/certifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcbound/bounds.hpp"
#include "arcbound/errors.hpp"
#include "arcbound/lambda.hpp"
#include "arcbound/oracle.hpp"

namespace arcbound {

namespace {

void check_b(const Real& b) {
  if (!b.is_finite() || !(b.sign() > 0)) {
    throw std::invalid_argument("certifier: b must be finite and positive");
  }
}

// Upper interval endpoint sqrt(2)-1 at the given width.
Real interval_hi(mpfr_prec_t bits) { return Real::sqrt2(bits) - 1; }

void check_u_domain(const Real& u, mpfr_prec_t wp, int caller_bits) {
  // Slack of a few ulps at the caller's width, so an endpoint rounded up
  // at a narrower precision still passes.
  const Real slack = Real::pow2(-(caller_bits - 8), wp);
  if (u.is_nan() || u < -slack || u > interval_hi(wp) + slack) {
    throw std::domain_error("certifier: u must lie in [0, sqrt(2)-1]");
  }
}

}  // namespace

namespace detail {

Real w_eval_bits(const Real& u, const Real& b, mpfr_prec_t bits) {
  const Real uw = u.round_to(bits);
  const Real bw = b.round_to(bits);
  const Real r2 = Real::sqrt2(bits);
  const Real num = r2 * (bw + 2) * (uw * uw + uw.mul_pow2(1) - 1);
  const Real den = (r2 - bw) * uw * uw - (r2 * uw).mul_pow2(1) - bw - r2;
  if (abs(den) <= Real::pow2(-static_cast<long>(bits) / 2, bits)) {
    throw SingularDenominatorError("w_eval: rational denominator vanished");
  }
  return num / den - Real::pi(bits).mul_pow2(-1) + atan(uw).mul_pow2(2);
}

Real w_prime_numerator_bits(const Real& u, const Real& b, mpfr_prec_t bits) {
  const Real uw = u.round_to(bits);
  const Real bw = b.round_to(bits);
  const Real r2 = Real::sqrt2(bits);
  const Real b2 = bw * bw;
  const Real r2b2 = r2 * b2;
  const Real r2b = r2 * bw;

  const Real a4 = b2.mul_pow2(2) + r2b2.mul_pow2(1) - bw.mul_pow2(3) - r2b.mul_pow2(2) - 8;
  const Real a3 = -r2b2.mul_pow2(2) + r2b.mul_pow2(3) - 32;
  const Real a2 = b2.mul_pow2(3) - bw.mul_pow2(4) - 16;
  const Real a1 = -r2b2.mul_pow2(2) + r2b.mul_pow2(3) + 32;
  const Real a0 = b2.mul_pow2(2) - r2b2.mul_pow2(1) - bw.mul_pow2(3) + r2b.mul_pow2(2) - 8;

  return (((a4 * uw + a3) * uw + a2) * uw + a1) * uw + a0;
}

Real w_prime_bits(const Real& u, const Real& b, mpfr_prec_t bits) {
  const Real uw = u.round_to(bits);
  const Real bw = b.round_to(bits);
  const Real r2 = Real::sqrt2(bits);
  const Real q = (bw - r2) * uw * uw + (r2 * uw).mul_pow2(1) + bw + r2;
  const Real den = (uw * uw + 1) * q * q;
  if (abs(den) <= Real::pow2(-static_cast<long>(bits) / 2, bits)) {
    throw SingularDenominatorError("w_prime: rational denominator vanished");
  }
  return w_prime_numerator_bits(uw, bw, bits) / den;
}

}  // namespace detail

Real w_eval(const Real& u, const Real& b, const PrecisionConfig& prec) {
  prec.validate();
  check_b(b);
  const mpfr_prec_t wp = prec.working_bits();
  check_u_domain(u.round_to(wp), wp, prec.mantissa_bits);
  return detail::w_eval_bits(u, b, wp).round_to(prec.mantissa_bits);
}

Real w_prime(const Real& u, const Real& b, const PrecisionConfig& prec) {
  prec.validate();
  check_b(b);
  const mpfr_prec_t wp = prec.working_bits();
  check_u_domain(u.round_to(wp), wp, prec.mantissa_bits);
  return detail::w_prime_bits(u, b, wp).round_to(prec.mantissa_bits);
}

std::vector<CriticalPoint> critical_points(const Real& b, const PrecisionConfig& prec) {
  prec.validate();
  check_b(b);
  const mpfr_prec_t wp = prec.working_bits();
  const Real bw = b.round_to(wp);
  const Real zero(0L, wp);
  const Real r2 = Real::sqrt2(wp);
  const Real hi = interval_hi(wp);

  const Real b2 = bw * bw;
  const Real radicand = -(b2 * b2) + (b2 * bw).mul_pow2(2) + b2.mul_pow2(2) - bw.mul_pow2(4);
  if (radicand < zero) {
    throw ComplexRootError(
        "critical_points: negative radicand, the outer stationary points "
        "are complex for this b");
  }
  const Real root = sqrt(radicand);
  const Real den = b2 - bw.mul_pow2(1) + r2.mul_pow2(1) - 4;

  // u1 in the cancellation-free form (b^2-2b-4-2 sqrt(2))/(2 sqrt(2)+root):
  // multiplying numerator and denominator of the textbook quotient by
  // (2 sqrt(2)+root) removes the 0/0 at the parameter where den vanishes.
  const Real u1 = (b2 - bw.mul_pow2(1) - 4 - r2.mul_pow2(1)) / (r2.mul_pow2(1) + root);
  // u4 keeps the direct form; it genuinely escapes to infinity where den
  // vanishes and the magnitude itself reports that.
  const Real u4 = (r2.mul_pow2(1) + root) / den;
  const Real u23 = hi;

  const Real polish_radius = Real::from_decimal("1e-3", wp);
  const Real residual_tol = prec.certification_tolerance();

  auto polish = [&](const Real& guess) -> CriticalPoint {
    CriticalPoint cp;
    cp.u = guess;
    Real lo_u = guess - polish_radius;
    Real hi_u = guess + polish_radius;
    // Skip polishing far outside the interval of interest, where the
    // denominator of w' may vanish inside the polish window.
    const bool polishable = abs(guess) <= Real(2L, wp);
    if (polishable) {
      const Real nlo = detail::w_prime_numerator_bits(lo_u, bw, wp);
      const Real nhi = detail::w_prime_numerator_bits(hi_u, bw, wp);
      if (nlo.sign() != 0 && nhi.sign() != 0 && nlo.sign() != nhi.sign()) {
        Real a = lo_u, fa = nlo;
        Real c = hi_u;
        const Real width_tol = prec.root_tolerance();
        while (c - a > width_tol) {
          const Real mid = (a + c).mul_pow2(-1);
          const Real fm = detail::w_prime_numerator_bits(mid, bw, wp);
          if (fm.sign() == 0) {
            a = mid;
            c = mid;
            break;
          }
          if (fm.sign() == fa.sign()) {
            a = mid;
            fa = fm;
          } else {
            c = mid;
          }
        }
        cp.u = (a + c).mul_pow2(-1);
      } else {
        // No sign change: even multiplicity, keep the closed form.
        cp.double_root = nlo.sign() != 0 && nlo.sign() == nhi.sign();
      }
    }
    // Residual |w'|; fall back to the bare numerator if the denominator
    // is too small to divide by.
    Real res = Real::with_bits(wp);
    try {
      res = abs(detail::w_prime_bits(cp.u, bw, wp));
    } catch (const SingularDenominatorError&) {
      res = abs(detail::w_prime_numerator_bits(cp.u, bw, wp));
    }
    if (res > residual_tol) {
      throw CertificationError(
          "critical_points: closed-form stationary point fails the residual "
          "check, the quartic coefficients or the root forms are wrong");
    }
    cp.residual = res;
    const Real slack = Real::pow2(-(prec.mantissa_bits - 8), wp);
    cp.inside = cp.u >= -slack && cp.u <= hi + slack;
    return cp;
  };

  std::vector<CriticalPoint> pts;
  pts.push_back(polish(u1));
  {
    // The quartic has a parameter-independent double root at sqrt(2)-1;
    // no sign change exists there, so the closed form is kept.
    CriticalPoint cp = polish(u23);
    cp.double_root = true;
    pts.push_back(cp);
  }
  pts.push_back(polish(u4));

  std::sort(pts.begin(), pts.end(),
            [](const CriticalPoint& x, const CriticalPoint& y) { return x.u < y.u; });
  for (CriticalPoint& cp : pts) {
    cp.u = cp.u.round_to(prec.mantissa_bits);
    cp.residual = cp.residual.round_to(prec.mantissa_bits);
  }
  return pts;
}

NonnegCertificate certify_upper_bound(const Real& b, const PrecisionConfig& prec) {
  prec.validate();
  check_b(b);
  const mpfr_prec_t wp = prec.working_bits();
  const Real bw = b.round_to(wp);
  const Real zero(0L, wp);
  const Real hi = interval_hi(wp);

  NonnegCertificate cert;
  cert.b = b.round_to(prec.mantissa_bits);
  cert.interval_lo = Real(0L, prec.mantissa_bits);
  cert.interval_hi = hi.round_to(prec.mantissa_bits);
  cert.precision_used = prec.mantissa_bits;

  // Interior stationary points; none exist when the quartic's outer roots
  // are complex, and w is then monotone between the endpoints.
  std::vector<Real> interior;
  try {
    const Real edge = prec.root_tolerance();
    for (const CriticalPoint& cp : critical_points(bw, prec)) {
      const Real u = cp.u.round_to(wp);
      if (u > edge && u < hi - edge) {
        interior.push_back(u);
      }
    }
  } catch (const ComplexRootError&) {
  }

  std::vector<Real> probes;
  probes.push_back(zero);
  for (const Real& u : interior) probes.push_back(u);
  probes.push_back(hi);
  // Midpoint sentinels between consecutive probes guard against a missed
  // stationary point flipping the verdict silently.
  std::vector<Real> all;
  for (size_t i = 0; i < probes.size(); ++i) {
    all.push_back(probes[i]);
    if (i + 1 < probes.size()) {
      all.push_back((probes[i] + probes[i + 1]).mul_pow2(-1));
    }
  }

  Real min_value = Real::with_bits(wp);
  Real min_location = Real::with_bits(wp);
  bool first = true;
  std::vector<Real> values;
  values.reserve(all.size());
  for (const Real& u : all) {
    const Real v = detail::w_eval_bits(u, bw, wp);
    values.push_back(v);
    if (first || v < min_value) {
      min_value = v;
      min_location = u;
      first = false;
    }
  }

  cert.endpoint_values = {values.front().round_to(prec.mantissa_bits),
                          values.back().round_to(prec.mantissa_bits)};
  for (const Real& u : interior) {
    cert.critical_points.push_back(u.round_to(prec.mantissa_bits));
    cert.extremum_values.push_back(
        detail::w_eval_bits(u, bw, wp).round_to(prec.mantissa_bits));
  }
  cert.min_value = min_value.round_to(prec.mantissa_bits);
  cert.min_location = min_location.round_to(prec.mantissa_bits);
  cert.verdict = min_value >= -prec.certification_tolerance();
  return cert;
}

LowerCounterexample lower_counterexample(const Real& b, const PrecisionConfig& prec) {
  prec.validate();
  check_b(b);
  const mpfr_prec_t wp = prec.working_bits();
  const Real bw = b.round_to(wp);
  const Real b1 = matched_upper_beta(wp);
  if (!(bw > b1) || !(bw < Real(4L, wp))) {
    throw std::invalid_argument(
        "lower_counterexample: b must lie strictly between the endpoint "
        "solution and 4");
  }

  const Real zero(0L, wp);
  const Real g0 = g_eval(bw, zero, prec);
  const Real g1 = g_eval(bw, Real(1L, wp), prec);
  if (!(g0 > Real(0L, prec.mantissa_bits)) || !(g1 < Real(0L, prec.mantissa_bits))) {
    throw CertificationError(
        "lower_counterexample: expected g(0) > 0 > g(1) does not hold");
  }

  Real lo = zero;
  Real hi(1L, wp);
  const Real width_tol = prec.root_tolerance();
  while (hi - lo > width_tol) {
    const Real mid = (lo + hi).mul_pow2(-1);
    const Real gm = g_eval(bw, mid, prec);
    if (gm.sign() > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  LowerCounterexample ce;
  const Real cb = (lo + hi).mul_pow2(-1);
  ce.c_b = cb.round_to(prec.mantissa_bits);
  const Real xi = cb.mul_pow2(-1);
  ce.xi = xi.round_to(prec.mantissa_bits);
  ce.g_xi = g_eval(bw, xi, prec);
  if (!(ce.g_xi > Real(0L, prec.mantissa_bits))) {
    throw CertificationError(
        "lower_counterexample: probe left of the sign change is not positive");
  }
  return ce;
}

}  // namespace arcbound
