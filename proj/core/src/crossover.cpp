#include "arcbound/crossover.hpp"

#include <functional>
#include <stdexcept>

#include "arcbound/errors.hpp"
#include "arcbound/oracle.hpp"

namespace arcbound {

namespace {

Ordering classify(const Real& diff, const Real& tol) {
  if (abs(diff) <= tol) return Ordering::Equal;
  return diff.sign() > 0 ? Ordering::Greater : Ordering::Less;
}

DominanceReport order_report_impl(
    const std::function<Real(const Real&)>& diff_fn, long grid_size,
    const PrecisionConfig& prec) {
  prec.validate();
  if (grid_size < 3) {
    throw std::invalid_argument("order_report: grid_size must be at least 3");
  }
  const mpfr_prec_t wp = prec.working_bits();
  const Real tol = prec.equality_tolerance();

  DominanceReport rep;
  rep.grid_size = grid_size;

  bool have_prev_strict = false;
  Real prev_strict_x = Real::with_bits(wp);
  Ordering prev_strict = Ordering::Equal;
  bool first = true;
  Ordering first_class = Ordering::Equal;
  bool uniform = true;

  for (long i = 1; i <= grid_size; ++i) {
    const Real x = Real(i, wp) / (grid_size + 1);
    const Real d = diff_fn(x);
    const Ordering cls = classify(d, tol);
    switch (cls) {
      case Ordering::Less:
        ++rep.less_count;
        break;
      case Ordering::Equal:
        ++rep.equal_count;
        break;
      case Ordering::Greater:
        ++rep.greater_count;
        break;
    }
    if (first) {
      first_class = cls;
      first = false;
      rep.min_abs_gap = abs(d);
      rep.min_abs_gap_x = x;
    } else {
      if (cls != first_class) uniform = false;
      if (abs(d) < rep.min_abs_gap) {
        rep.min_abs_gap = abs(d);
        rep.min_abs_gap_x = x;
      }
    }
    if (cls != Ordering::Equal) {
      if (have_prev_strict && cls != prev_strict) {
        rep.sign_change_cells.push_back(
            {prev_strict_x.round_to(prec.mantissa_bits),
             x.round_to(prec.mantissa_bits)});
      }
      have_prev_strict = true;
      prev_strict_x = x;
      prev_strict = cls;
    }
  }

  rep.uniform = uniform;
  rep.order_when_uniform = uniform ? first_class : Ordering::Equal;
  rep.min_abs_gap = rep.min_abs_gap.round_to(prec.mantissa_bits);
  rep.min_abs_gap_x = rep.min_abs_gap_x.round_to(prec.mantissa_bits);
  return rep;
}

}  // namespace

CrossoverResult find_crossover(const BoundSpec& a, const BoundSpec& b,
                               const PrecisionConfig& prec) {
  prec.validate();
  a.validate();
  b.validate();
  const mpfr_prec_t wp = prec.working_bits();
  auto diff = [&](const Real& x) {
    return detail::eval_bound_bits(a, x, wp) - detail::eval_bound_bits(b, x, wp);
  };

  // Coarse scan: 1024 uniform cells over [10^-6, 1-10^-6].
  const long cells = 1024;
  const Real margin = Real::from_decimal("1e-6", wp);
  const Real span = 1 - margin.mul_pow2(1);
  std::vector<Real> xs;
  std::vector<int> signs;
  xs.reserve(cells + 1);
  signs.reserve(cells + 1);
  for (long i = 0; i <= cells; ++i) {
    const Real x = margin + span * i / cells;
    xs.push_back(x);
    signs.push_back(diff(x).sign());
  }

  std::vector<long> change_cells;
  for (long i = 0; i < cells; ++i) {
    const int s0 = signs[static_cast<size_t>(i)];
    const int s1 = signs[static_cast<size_t>(i + 1)];
    if (s0 == 0 && s1 == 0) continue;
    if (s0 * s1 < 0 || s0 == 0 || s1 == 0) {
      change_cells.push_back(i);
      // A zero hit at a shared node would register for both adjacent
      // cells; skip the duplicate.
      if (s1 == 0 && i + 1 < cells) ++i;
    }
  }
  if (change_cells.empty()) {
    throw NoCrossoverError(
        "find_crossover: the difference keeps one sign over the scan grid");
  }

  CrossoverResult res;
  for (size_t k = 1; k < change_cells.size(); ++k) {
    const long i = change_cells[k];
    res.extra_sign_changes.push_back(
        ((xs[static_cast<size_t>(i)] + xs[static_cast<size_t>(i + 1)]).mul_pow2(-1))
            .round_to(prec.mantissa_bits));
  }

  Real lo = xs[static_cast<size_t>(change_cells[0])];
  Real hi = xs[static_cast<size_t>(change_cells[0] + 1)];
  int slo = diff(lo).sign();
  if (slo == 0) {
    // Node hit: nudge the edge inward by one scan step fraction.
    lo = lo + (hi - lo) / 1024;
    slo = diff(lo).sign();
  }
  const Real rel_tol = Real::pow2(-(prec.mantissa_bits - 16), wp);
  while (hi - lo > rel_tol * hi) {
    const Real mid = (lo + hi).mul_pow2(-1);
    const int sm = diff(mid).sign();
    if (sm == 0) {
      const Real quarter = (hi - lo).mul_pow2(-2);
      lo = mid - quarter;
      hi = mid + quarter;
      if (diff(lo).sign() * diff(hi).sign() >= 0) break;
      slo = diff(lo).sign();
      continue;
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const Real c = (lo + hi).mul_pow2(-1);
  res.c = c.round_to(prec.mantissa_bits);
  res.bracket_lo = lo.round_to(prec.mantissa_bits);
  res.bracket_hi = hi.round_to(prec.mantissa_bits);
  res.residual = abs(diff(c)).round_to(prec.mantissa_bits);

  const Real tol = prec.equality_tolerance();
  res.left_order = classify(diff(c.mul_pow2(-1)), tol);
  res.right_order = classify(diff((c + 1).mul_pow2(-1)), tol);
  return res;
}

DominanceReport order_report(const BoundSpec& a, const BoundSpec& b,
                             long grid_size, const PrecisionConfig& prec) {
  a.validate();
  b.validate();
  const mpfr_prec_t wp = prec.working_bits();
  return order_report_impl(
      [&](const Real& x) {
        return detail::eval_bound_bits(a, x, wp) - detail::eval_bound_bits(b, x, wp);
      },
      grid_size, prec);
}

DominanceReport order_report(const BoundSpec& a, ReferenceArcsin,
                             long grid_size, const PrecisionConfig& prec) {
  a.validate();
  const mpfr_prec_t wp = prec.working_bits();
  return order_report_impl(
      [&](const Real& x) {
        return detail::eval_bound_bits(a, x, wp) - detail::arcsin_bits(x, wp);
      },
      grid_size, prec);
}

}  // namespace arcbound
