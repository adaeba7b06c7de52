#pragma once

#include <functional>
#include <vector>

#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

struct DerivativeResult {
  Real value;
  // Upper estimate of |value - true derivative|: extrapolation residual
  // plus the rounding floor of the stencil sums.
  Real error_estimate;
  int levels_used = 0;
};

// Finite-difference weights for the order-th derivative at z on arbitrary
// distinct nodes. Exact for polynomials of degree < nodes.size().
// Throws std::invalid_argument on repeated nodes or order >= node count.
std::vector<Real> stencil_weights(const Real& z, const std::vector<Real>& nodes,
                                  int order);

// Derivative of f at x0 for order 0..5, by finite differences on a stencil
// confined to [domain_lo, domain_hi] plus step-halving extrapolation.
// One-sided stencils are used near the domain edges, centered ones inside.
// Throws std::invalid_argument for orders above 5, std::domain_error when
// x0 lies outside the domain, StepCollapseError when no step fits.
DerivativeResult numeric_derivative(const std::function<Real(const Real&)>& f,
                                    const Real& x0, int order,
                                    const PrecisionConfig& prec,
                                    double domain_lo = 0.0,
                                    double domain_hi = 1.0);

}  // namespace arcbound
