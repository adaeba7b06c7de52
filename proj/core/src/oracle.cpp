#include "arcbound/oracle.hpp"

#include <stdexcept>

namespace arcbound {

namespace detail {

Real arcsin_bits(const Real& x, mpfr_prec_t bits) {
  const Real zero(0L, bits);
  const Real one(1L, bits);
  if (x.is_nan() || x < zero || x > one) {
    throw std::domain_error("arcsin_ref: argument must lie in [0, 1]");
  }
  if (x == one) {
    return Real::pi(bits).mul_pow2(-1);
  }
  // sqrt(1-x^2) split as sqrt(1-x)*sqrt(1+x) keeps full accuracy near 1.
  const Real xw = x.round_to(bits);
  const Real root = sqrt(one - xw) * sqrt(one + xw);
  const Real cutoff(0.9, bits);
  if (xw <= cutoff) {
    // arcsin x = atan(x / sqrt(1-x^2)), well conditioned for small x.
    return atan(xw / root);
  }
  // Near 1 the atan form loses bits; reflect through the complement,
  // where sqrt(1 - root^2) is just x again.
  return Real::pi(bits).mul_pow2(-1) - atan(root / xw);
}

}  // namespace detail

Real arcsin_ref(const Real& x, const PrecisionConfig& prec) {
  prec.validate();
  return detail::arcsin_bits(x, prec.working_bits()).round_to(prec.mantissa_bits);
}

Real const_pi(const PrecisionConfig& prec) {
  prec.validate();
  return Real::pi(prec.mantissa_bits);
}

Real const_sqrt2(const PrecisionConfig& prec) {
  prec.validate();
  return Real::sqrt2(prec.mantissa_bits);
}

}  // namespace arcbound
