#pragma once

#include <string>
#include <vector>

#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

struct NamedConstant {
  std::string name;
  Real value;
  // Human-readable defining expression.
  std::string closed_form;
};

// The six parameters the bound families are quoted with: the two algebraic
// parameters 2 and 2/(pi-2), the two square-root parameters 4 and
// sqrt(2)(4-pi)/(pi-2 sqrt(2)), the offset-4 upper numerator pi(sqrt(2)+1/2),
// and the crossover abscissa where the two competing upper bounds agree.
// Values are computed at the configured precision; the crossover entry is
// located numerically from its defining equation.
std::vector<NamedConstant> named_constants(const PrecisionConfig& prec);

// Looks up one entry by name. Throws std::invalid_argument for unknown names.
NamedConstant named_constant(const std::string& name, const PrecisionConfig& prec);

}  // namespace arcbound
