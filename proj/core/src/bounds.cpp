#include "arcbound/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "arcbound/oracle.hpp"

namespace arcbound {

namespace {

void check_positive(const Real& v, const char* what) {
  if (!v.is_finite() || !(v > Real(0L, v.bits()))) {
    throw std::invalid_argument(std::string("BoundSpec: ") + what +
                                " must be finite and positive");
  }
}

void check_x_domain(const Real& x) {
  const Real zero(0L, x.bits());
  const Real one(1L, x.bits());
  if (x.is_nan() || x < zero || x > one) {
    throw std::domain_error("eval_bound: x must lie in [0, 1]");
  }
}

Real eval_algebraic(const Real& b, const Real& x, mpfr_prec_t wp) {
  const Real xw = x.round_to(wp);
  const Real one(1L, wp);
  const Real root = sqrt(one - xw) * sqrt(one + xw);
  return (b.round_to(wp) + 1) * xw / (b.round_to(wp) + root);
}

Real eval_sqrt_family(const Real& alpha, const Real& beta, const Real& x,
                      mpfr_prec_t wp) {
  const Real xw = x.round_to(wp);
  const Real one(1L, wp);
  // sqrt(1+x) - sqrt(1-x) rewritten as 2x / (sqrt(1+x) + sqrt(1-x)),
  // so the numerator vanishes exactly at 0 and keeps accuracy near it.
  const Real s = sqrt(one + xw) + sqrt(one - xw);
  return (alpha.round_to(wp) * xw).mul_pow2(1) / (s * (beta.round_to(wp) + s));
}

// Effective (alpha, beta) of a square-root family spec.
std::pair<Real, Real> sqrt_params(const BoundSpec& spec, mpfr_prec_t wp) {
  switch (spec.family) {
    case Family::SqrtTwoParam:
      return {spec.alpha.round_to(wp), spec.beta.round_to(wp)};
    case Family::SqrtMatched:
      return {spec.beta.round_to(wp) + 2, spec.beta.round_to(wp)};
    default:
      throw std::invalid_argument(
          "compare_pointwise: both specs must be square-root family");
  }
}

}  // namespace

BoundSpec BoundSpec::algebraic_shafer(Real b) {
  BoundSpec s{Family::AlgebraicShafer, Real::with_bits(MPFR_PREC_MIN), std::move(b)};
  s.validate();
  return s;
}

BoundSpec BoundSpec::sqrt_two_param(Real alpha, Real beta) {
  BoundSpec s{Family::SqrtTwoParam, std::move(alpha), std::move(beta)};
  s.validate();
  return s;
}

BoundSpec BoundSpec::sqrt_matched(Real beta) {
  BoundSpec s{Family::SqrtMatched, Real::with_bits(MPFR_PREC_MIN), std::move(beta)};
  s.validate();
  return s;
}

void BoundSpec::validate() const {
  check_positive(beta, "beta");
  if (family == Family::SqrtTwoParam) {
    check_positive(alpha, "alpha");
  }
}

Real matched_upper_beta(mpfr_prec_t bits) {
  const Real pi = Real::pi(bits);
  const Real r2 = Real::sqrt2(bits);
  return r2 * (4 - pi) / (pi - r2.mul_pow2(1));
}

Real zhu_numerator_alpha(mpfr_prec_t bits) {
  const Real pi = Real::pi(bits);
  const Real r2 = Real::sqrt2(bits);
  return pi * (r2 + Real(0.5, bits));
}

Real algebraic_upper_b(mpfr_prec_t bits) {
  return 2 / (Real::pi(bits) - 2);
}

namespace detail {

Real eval_bound_bits(const BoundSpec& spec, const Real& x, mpfr_prec_t bits) {
  spec.validate();
  check_x_domain(x);
  switch (spec.family) {
    case Family::AlgebraicShafer:
      return eval_algebraic(spec.beta, x, bits);
    case Family::SqrtTwoParam:
      return eval_sqrt_family(spec.alpha, spec.beta, x, bits);
    case Family::SqrtMatched:
      return eval_sqrt_family(spec.beta + 2, spec.beta, x, bits);
  }
  throw std::invalid_argument("eval_bound: unknown family");
}

}  // namespace detail

Real eval_bound(const BoundSpec& spec, const Real& x, const PrecisionConfig& prec) {
  prec.validate();
  return detail::eval_bound_bits(spec, x, prec.working_bits())
      .round_to(prec.mantissa_bits);
}

double eval_bound_fp64(const BoundSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("eval_bound_fp64: x must lie in [0, 1]");
  }
  spec.validate();
  const double beta = spec.beta.to_double();
  if (spec.family == Family::AlgebraicShafer) {
    const double root = std::sqrt(1.0 - x) * std::sqrt(1.0 + x);
    return (beta + 1.0) * x / (beta + root);
  }
  const double alpha =
      spec.family == Family::SqrtTwoParam ? spec.alpha.to_double() : beta + 2.0;
  const double s = std::sqrt(1.0 + x) + std::sqrt(1.0 - x);
  return 2.0 * alpha * x / (s * (beta + s));
}

std::vector<Real> eval_chain(const Real& x, const PrecisionConfig& prec) {
  prec.validate();
  check_x_domain(x);
  const mpfr_prec_t wp = prec.working_bits();
  const Real xw = x.round_to(wp);
  const Real one(1L, wp);
  const Real two(2L, wp);
  const Real four(4L, wp);
  const Real pi = Real::pi(wp);

  std::vector<Real> v;
  v.reserve(6);
  v.push_back(eval_algebraic(two, xw, wp));
  v.push_back(eval_sqrt_family(four + 2, four, xw, wp));
  v.push_back(detail::arcsin_bits(xw, wp));
  const Real b1 = matched_upper_beta(wp);
  v.push_back(eval_sqrt_family(b1 + 2, b1, xw, wp));
  v.push_back(eval_sqrt_family(zhu_numerator_alpha(wp), four, xw, wp));
  // Upper member with pi in the numerator over the algebraic denominator.
  const Real root = sqrt(one - xw) * sqrt(one + xw);
  v.push_back(pi * xw / (two + root));

  for (Real& m : v) m = m.round_to(prec.mantissa_bits);
  return v;
}

const std::array<std::string_view, 6>& chain_member_names() {
  static const std::array<std::string_view, 6> names = {
      "algebraic_lower", "sqrt_lower", "arcsin",
      "sqrt_upper",      "offset4_upper", "pi_numerator_upper",
  };
  return names;
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "less";
    case Ordering::Equal:
      return "equal";
    case Ordering::Greater:
      return "greater";
  }
  return "unknown";
}

Ordering ordering_from_string(std::string_view text) {
  if (text == "less") return Ordering::Less;
  if (text == "equal") return Ordering::Equal;
  if (text == "greater") return Ordering::Greater;
  throw std::invalid_argument("ordering_from_string: unknown ordering: " +
                              std::string(text));
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::AlgebraicShafer:
      return "algebraic";
    case Family::SqrtTwoParam:
      return "sqrt2p";
    case Family::SqrtMatched:
      return "matched";
  }
  return "unknown";
}

Family family_from_string(std::string_view text) {
  if (text == "algebraic") return Family::AlgebraicShafer;
  if (text == "sqrt2p") return Family::SqrtTwoParam;
  if (text == "matched") return Family::SqrtMatched;
  throw std::invalid_argument("family_from_string: unknown family: " +
                              std::string(text));
}

Ordering compare_pointwise(const BoundSpec& a, const BoundSpec& b, const Real& x,
                           const PrecisionConfig& prec) {
  prec.validate();
  a.validate();
  b.validate();
  const mpfr_prec_t wp = prec.working_bits();
  const Real zero(0L, wp);
  const Real one(1L, wp);
  const Real xw = x.round_to(wp);
  if (x.is_nan() || !(xw > zero) || xw > one) {
    throw std::domain_error("compare_pointwise: x must lie in (0, 1]");
  }
  const auto [a1, b1] = sqrt_params(a, wp);
  const auto [a2, b2] = sqrt_params(b, wp);

  const Real s = sqrt(one + xw) + sqrt(one - xw);
  const Real lhs = a1 * b2 - a2 * b1;
  const Real rhs = (a2 - a1) * s;
  const Real diff = lhs - rhs;

  // a > b exactly when lhs > rhs; scale the tie window by the operand size.
  const Real scale = max(one, max(abs(lhs), abs(rhs)));
  if (abs(diff) <= prec.equality_tolerance() * scale) return Ordering::Equal;
  return diff.sign() > 0 ? Ordering::Greater : Ordering::Less;
}

}  // namespace arcbound
