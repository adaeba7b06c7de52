#include "arcbound/precision.hpp"

#include <stdexcept>
#include <string>

namespace arcbound {

void PrecisionConfig::validate() const {
  if (mantissa_bits < 64 || mantissa_bits > 4096) {
    throw std::invalid_argument("PrecisionConfig: mantissa_bits must be in [64, 4096], got " +
                                std::to_string(mantissa_bits));
  }
  if (!(derivative_step > 0.0) || derivative_step > 0.5) {
    throw std::invalid_argument("PrecisionConfig: derivative_step must be in (0, 0.5], got " +
                                std::to_string(derivative_step));
  }
}

Real PrecisionConfig::equality_tolerance() const {
  validate();
  return Real::pow2(-(mantissa_bits - 8), mantissa_bits);
}

Real PrecisionConfig::root_tolerance() const {
  validate();
  return Real::pow2(-(mantissa_bits - 16), mantissa_bits);
}

Real PrecisionConfig::certification_tolerance() const {
  validate();
  return Real::pow2(-(mantissa_bits / 2), mantissa_bits);
}

Real PrecisionConfig::derivative_tolerance() const {
  validate();
  return Real::pow2(-(mantissa_bits / 2 - 10), mantissa_bits);
}

}  // namespace arcbound
