#pragma once

#include <vector>

#include "arcbound/bounds.hpp"
#include "arcbound/precision.hpp"
#include "arcbound/real.hpp"

namespace arcbound {

struct CrossoverResult {
  // Abscissa where the two bounds agree.
  Real c;
  // Final bisection bracket; the difference changes sign across it.
  Real bracket_lo;
  Real bracket_hi;
  // |a(c) - b(c)|.
  Real residual;
  // Ordering of a vs b sampled at the midpoint of (0, c).
  Ordering left_order = Ordering::Equal;
  // Ordering of a vs b sampled at the midpoint of (c, 1).
  Ordering right_order = Ordering::Equal;
  // Midpoints of further sign-change cells beyond the first, for inputs
  // that cross more than once.
  std::vector<Real> extra_sign_changes;
};

// Finds where a - b changes sign on (0, 1): a coarse scan over 1024
// uniform cells starting at 10^-6 (both bounds vanish at 0, so the
// ordering is read strictly inside the interval), then bisection of the
// first sign-change cell to a relative width of 2^-(mantissa_bits-16).
// Throws NoCrossoverError when the scan finds no sign change.
CrossoverResult find_crossover(const BoundSpec& a, const BoundSpec& b,
                               const PrecisionConfig& prec);

struct SignChangeCell {
  Real lo;
  Real hi;
};

// Marks the second comparand of order_report as the reference arcsin.
struct ReferenceArcsin {};
inline constexpr ReferenceArcsin reference_arcsin{};

struct DominanceReport {
  long grid_size = 0;
  long less_count = 0;
  long equal_count = 0;
  long greater_count = 0;
  // One classification holds at every grid point.
  bool uniform = false;
  Ordering order_when_uniform = Ordering::Equal;
  std::vector<SignChangeCell> sign_change_cells;
  Real min_abs_gap;
  Real min_abs_gap_x;
};

// Classifies sign(a - b) on a uniform grid of grid_size points strictly
// inside (0, 1) and summarizes whether one bound dominates throughout.
// Throws std::invalid_argument for grid_size < 3.
DominanceReport order_report(const BoundSpec& a, const BoundSpec& b,
                             long grid_size, const PrecisionConfig& prec);
// Same against the reference arcsin in place of a second bound.
DominanceReport order_report(const BoundSpec& a, ReferenceArcsin,
                             long grid_size, const PrecisionConfig& prec);

}  // namespace arcbound
