#pragma once

#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

// Reference arcsin on [0, 1], accurate to the last bit of the configured
// precision. Built from atan and sqrt so that it stays an independent
// check against the library asin used in tests.
// Throws std::domain_error outside [0, 1].
Real arcsin_ref(const Real& x, const PrecisionConfig& prec);

Real const_pi(const PrecisionConfig& prec);
Real const_sqrt2(const PrecisionConfig& prec);

namespace detail {

// Same function at an explicit mantissa width, no final re-rounding.
// Internal evaluation paths use this to avoid double rounding.
Real arcsin_bits(const Real& x, mpfr_prec_t bits);

}  // namespace detail

}  // namespace arcbound
