#include "arcbound/constants.hpp"

#include <stdexcept>

#include "arcbound/bounds.hpp"
#include "arcbound/crossover.hpp"

namespace arcbound {

std::vector<NamedConstant> named_constants(const PrecisionConfig& prec) {
  prec.validate();
  const int bits = prec.mantissa_bits;

  std::vector<NamedConstant> table;
  table.reserve(6);
  table.push_back({"algebraic_lower_b", Real(2L, bits), "2"});
  table.push_back({"algebraic_upper_b", algebraic_upper_b(bits), "2/(pi - 2)"});
  table.push_back({"sqrt_lower_beta", Real(4L, bits), "4"});
  table.push_back({"sqrt_upper_beta", matched_upper_beta(bits),
                   "sqrt(2)(4 - pi)/(pi - 2 sqrt(2))"});
  table.push_back({"offset4_upper_alpha", zhu_numerator_alpha(bits),
                   "pi(sqrt(2) + 1/2), denominator offset 4"});

  const BoundSpec algebraic_upper =
      BoundSpec::algebraic_shafer(algebraic_upper_b(prec.working_bits()));
  const BoundSpec offset4_upper = BoundSpec::sqrt_two_param(
      zhu_numerator_alpha(prec.working_bits()), Real(4L, prec.working_bits()));
  const CrossoverResult cr = find_crossover(algebraic_upper, offset4_upper, prec);
  table.push_back({"upper_crossover_c", cr.c,
                   "unique x in (0,1) where the algebraic upper bound equals "
                   "the offset-4 upper bound"});
  return table;
}

NamedConstant named_constant(const std::string& name, const PrecisionConfig& prec) {
  for (const NamedConstant& c : named_constants(prec)) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("named_constant: unknown name: " + name);
}

}  // namespace arcbound
