#pragma once

#include "arcbound/real.hpp"

namespace arcbound {

// Central precision policy. Every numeric routine takes one of these and
// derives all of its tolerances from it, so precision changes in one place.
struct PrecisionConfig {
  // Mantissa width of results, in bits. Valid range [64, 4096].
  int mantissa_bits = 128;
  // Base step for finite-difference stencils.
  double derivative_step = 0.0625;

  void validate() const;

  // Intermediate computations carry this many bits before the final
  // rounding back to mantissa_bits.
  int working_bits() const { return mantissa_bits + 32; }

  // Two values closer than this are treated as equal.
  Real equality_tolerance() const;
  // Bracketing root searches stop at this width.
  Real root_tolerance() const;
  // Sign verdicts in certificates use this margin.
  Real certification_tolerance() const;
  // Agreement margin between numeric derivatives and closed forms.
  Real derivative_tolerance() const;
};

}  // namespace arcbound
