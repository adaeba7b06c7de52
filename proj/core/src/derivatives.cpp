#include "arcbound/derivatives.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arcbound/errors.hpp"

namespace arcbound {

std::vector<Real> stencil_weights(const Real& z, const std::vector<Real>& nodes,
                                  int order) {
  const int n = static_cast<int>(nodes.size());
  if (order < 0) throw std::invalid_argument("stencil_weights: negative order");
  if (order >= n) {
    throw std::invalid_argument("stencil_weights: need more than " +
                                std::to_string(order) + " nodes for order " +
                                std::to_string(order));
  }
  mpfr_prec_t wp = z.bits();
  for (const Real& x : nodes) wp = std::max(wp, x.bits());
  const Real zero(0L, wp);

  // Weight recurrence over nodes, one derivative column per order 0..m.
  std::vector<std::vector<Real>> c(
      static_cast<size_t>(n),
      std::vector<Real>(static_cast<size_t>(order) + 1, zero));
  c[0][0] = Real(1L, wp);
  Real c1(1L, wp);
  Real c4 = nodes[0].round_to(wp) - z;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    Real c2(1L, wp);
    Real c5 = c4;
    c4 = nodes[static_cast<size_t>(i)].round_to(wp) - z;
    for (int j = 0; j < i; ++j) {
      const Real c3 = nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)];
      if (c3.sign() == 0) {
        throw std::invalid_argument("stencil_weights: repeated node");
      }
      c2 = c2 * c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[static_cast<size_t>(i)][static_cast<size_t>(k)] =
              c1 * (k * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] -
                    c5 * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k)]) /
              c2;
        }
        c[static_cast<size_t>(i)][0] =
            -(c1 * c5 * c[static_cast<size_t>(i - 1)][0]) / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[static_cast<size_t>(j)][static_cast<size_t>(k)] =
            (c4 * c[static_cast<size_t>(j)][static_cast<size_t>(k)] -
             k * c[static_cast<size_t>(j)][static_cast<size_t>(k - 1)]) /
            c3;
      }
      c[static_cast<size_t>(j)][0] = c4 * c[static_cast<size_t>(j)][0] / c3;
    }
    c1 = c2;
  }

  std::vector<Real> w;
  w.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    w.push_back(c[static_cast<size_t>(i)][static_cast<size_t>(order)]);
  }
  return w;
}

namespace {

struct StencilPlan {
  std::vector<int> offsets;
  Real h;           // base step
  int lead_power;   // exponent of the leading error term in h
  int power_step;   // spacing of consecutive error exponents
};

StencilPlan plan_stencil(const Real& x0, int order, const PrecisionConfig& prec,
                         const Real& lo, const Real& hi) {
  const mpfr_prec_t wp = prec.working_bits();
  const Real room_l = x0 - lo;
  const Real room_r = hi - x0;

  const int half = (order + 8) / 2;       // centered: offsets -half..half
  const int reach = order + 6;            // one-sided: offsets 0..reach
  const Real step_floor = Real::pow2(-(prec.mantissa_bits / 2), wp);

  Real h(prec.derivative_step, wp);
  while (true) {
    if (h < step_floor) {
      throw StepCollapseError(
          "numeric_derivative: step collapsed below resolution before the "
          "stencil fit the domain");
    }
    const Real span_c = h * static_cast<long>(half);
    if (room_l >= span_c && room_r >= span_c) {
      StencilPlan p;
      for (int i = -half; i <= half; ++i) p.offsets.push_back(i);
      p.h = h;
      p.lead_power = 2 * half + 1 - order;
      if (p.lead_power % 2 != 0) ++p.lead_power;
      p.power_step = 2;
      return p;
    }
    const Real span_o = h * static_cast<long>(reach);
    const bool forward = room_r >= room_l;
    if ((forward ? room_r : room_l) >= span_o) {
      StencilPlan p;
      for (int i = 0; i <= reach; ++i) p.offsets.push_back(forward ? i : -i);
      p.h = h;
      p.lead_power = reach + 1 - order;
      p.power_step = 1;
      return p;
    }
    h = h.mul_pow2(-1);
  }
}

}  // namespace

DerivativeResult numeric_derivative(const std::function<Real(const Real&)>& f,
                                    const Real& x0, int order,
                                    const PrecisionConfig& prec,
                                    double domain_lo, double domain_hi) {
  prec.validate();
  if (order < 0 || order > 5) {
    throw std::invalid_argument("numeric_derivative: order must be in [0, 5], got " +
                                std::to_string(order));
  }
  const mpfr_prec_t wp = prec.working_bits();
  const Real lo(domain_lo, wp);
  const Real hi(domain_hi, wp);
  if (!(lo < hi)) {
    throw std::invalid_argument("numeric_derivative: empty domain");
  }
  const Real x = x0.round_to(wp);
  if (x < lo || x > hi) {
    throw std::domain_error("numeric_derivative: x0 outside the domain");
  }

  const Real round_ulp = Real::pow2(-prec.mantissa_bits + 1, wp);
  if (order == 0) {
    DerivativeResult r;
    const Real v = f(x);
    r.value = v.round_to(prec.mantissa_bits);
    r.error_estimate = (abs(v) * round_ulp).round_to(prec.mantissa_bits);
    r.levels_used = 0;
    return r;
  }

  const StencilPlan plan = plan_stencil(x, order, prec, lo, hi);
  const int max_levels = 12;

  // tableau[t] holds the newest extrapolant that has removed t error terms.
  std::vector<Real> diag;
  Real best_value = Real::with_bits(wp);
  Real best_err = Real::with_bits(wp);
  Real floor_acc(0L, wp);
  int best_level = -1;
  int worse_streak = 0;
  int level = 0;

  for (; level < max_levels; ++level) {
    const Real h = plan.h.mul_pow2(-level);
    std::vector<Real> nodes;
    nodes.reserve(plan.offsets.size());
    for (int off : plan.offsets) {
      nodes.push_back(x + h * static_cast<long>(off));
    }
    const std::vector<Real> w = stencil_weights(x, nodes, order);

    Real sum(0L, wp);
    Real mag(0L, wp);
    Real fmax(0L, wp);
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Real fi = f(nodes[i]).round_to(wp);
      sum = sum + w[i] * fi;
      mag = mag + abs(w[i]);
      fmax = max(fmax, abs(fi));
    }
    // Rounding floor of this stencil sum at working precision.
    const Real fl = mag * fmax * Real::pow2(-static_cast<long>(wp) + 3, wp);
    floor_acc = max(floor_acc, fl);

    // Neville update along the step-halving ladder.
    std::vector<Real> row;
    row.reserve(diag.size() + 1);
    row.push_back(sum);
    Real delta = Real::with_bits(wp);
    for (size_t t = 0; t < diag.size(); ++t) {
      const int p = plan.lead_power + static_cast<int>(t) * plan.power_step;
      const Real denom = Real::pow2(p, wp) - 1;
      const Real lifted = row[t] + (row[t] - diag[t]) / denom;
      delta = abs(row[t] - diag[t]);
      row.push_back(lifted);
    }
    diag = row;

    if (level >= 1) {
      const Real est = delta + floor_acc;
      if (best_level < 0 || est < best_err) {
        best_err = est;
        best_value = row.back();
        best_level = level;
        worse_streak = 0;
      } else if (++worse_streak >= 2) {
        ++level;
        break;
      }
    }
  }

  DerivativeResult r;
  const Real final_round = abs(best_value) * round_ulp;
  r.value = best_value.round_to(prec.mantissa_bits);
  r.error_estimate = (best_err + final_round).round_to(prec.mantissa_bits);
  r.levels_used = level;
  return r;
}

}  // namespace arcbound
