#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

enum class Family {
  AlgebraicShafer,  // f_b(x) = (b+1)x / (b + sqrt(1-x^2))
  SqrtTwoParam,     // phi_{alpha,beta}(x) = alpha(sqrt(1+x)-sqrt(1-x)) / (beta + sqrt(1+x) + sqrt(1-x))
  SqrtMatched,      // phi_{beta+2,beta}, the slope-1 subfamily
};

struct BoundSpec {
  Family family;
  Real alpha;  // used by SqrtTwoParam only
  Real beta;

  static BoundSpec algebraic_shafer(Real b);
  static BoundSpec sqrt_two_param(Real alpha, Real beta);
  static BoundSpec sqrt_matched(Real beta);

  // Throws std::invalid_argument when parameters are out of range
  // (all parameters must be finite and positive).
  void validate() const;
};

// Parameters appearing in the main inequality chain.
// beta making the matched family exact at x=1: sqrt(2)(4-pi)/(pi-2*sqrt(2)).
Real matched_upper_beta(mpfr_prec_t bits);
// Numerator constant pi(sqrt(2)+1/2) of the upper bound with denominator offset 4.
Real zhu_numerator_alpha(mpfr_prec_t bits);
// Parameter 2/(pi-2) making the algebraic family exact at x=1.
Real algebraic_upper_b(mpfr_prec_t bits);

// Family value at x in [0,1] at the configured precision. Exactly 0 at x=0.
// Throws std::domain_error for x outside [0,1], std::invalid_argument for
// bad specs.
Real eval_bound(const BoundSpec& spec, const Real& x, const PrecisionConfig& prec);

// Machine-precision fast path over the same spec, for benchmarking.
double eval_bound_fp64(const BoundSpec& spec, double x);

// The six-member inequality chain at x, ordered lower bounds, reference,
// upper bounds:
//   algebraic lower (b=2), square-root lower (beta=4), arcsin,
//   square-root upper (beta = matched_upper_beta), offset-4 upper
//   (alpha = zhu_numerator_alpha), algebraic upper with pi numerator.
std::vector<Real> eval_chain(const Real& x, const PrecisionConfig& prec);

// Labels of the chain members in eval_chain order.
const std::array<std::string_view, 6>& chain_member_names();

enum class Ordering { Less, Equal, Greater };

std::string_view to_string(Ordering o);
// Accepts "less", "equal", "greater"; throws std::invalid_argument otherwise.
Ordering ordering_from_string(std::string_view text);

std::string_view to_string(Family f);
// Accepts "algebraic", "sqrt2p", "matched"; throws std::invalid_argument
// otherwise.
Family family_from_string(std::string_view text);

// Ordering of a vs b at x in (0,1], via the cross-multiplied predicate
//   alpha1*beta2 - alpha2*beta1 > (alpha2 - alpha1)(sqrt(1+x) + sqrt(1-x)),
// which avoids forming the two quotients. Both specs must be square-root
// family (two-parameter or matched). Returns Greater when a > b; values
// within the relative equality tolerance are Equal.
Ordering compare_pointwise(const BoundSpec& a, const BoundSpec& b, const Real& x,
                           const PrecisionConfig& prec);

namespace detail {

// Family value at an explicit mantissa width, no final re-rounding.
// Internal evaluation paths use this to avoid double rounding.
Real eval_bound_bits(const BoundSpec& spec, const Real& x, mpfr_prec_t bits);

}  // namespace detail

}  // namespace arcbound
