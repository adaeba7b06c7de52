#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace arcbound {

// Arbitrary-precision Real backed by MPFR. The mantissa width in bits is
// fixed per value; binary operations produce a result at the wider of the
// two operand precisions. All roundings are to nearest-even.
class Real {
 public:
  // NaN at minimal width; a placeholder until assigned.
  Real();
  // NaN at the requested precision.
  static Real with_bits(mpfr_prec_t bits);

  Real(double v, mpfr_prec_t bits);
  Real(long v, mpfr_prec_t bits);

  // Parses a decimal literal such as "3.14159" or "-1.5e-3".
  // Throws std::invalid_argument on malformed input.
  static Real from_decimal(std::string_view text, mpfr_prec_t bits);

  static Real pi(mpfr_prec_t bits);
  static Real sqrt2(mpfr_prec_t bits);
  // 2^e, exact at any precision.
  static Real pow2(long e, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const;
  double to_double() const;
  long to_long() const;
  bool is_nan() const;
  bool is_finite() const;
  // -1, 0, +1. Zero for NaN as well; check is_nan first where it matters.
  int sign() const;

  // Re-rounds to a new precision.
  Real round_to(mpfr_prec_t bits) const;

  // Decimal string with the given number of significant digits,
  // in scientific form, e.g. "3.1415926536e+00".
  std::string str(int digits) const;

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  // Exact scaling by 2^e.
  Real mul_pow2(long e) const;

  friend bool operator<(const Real& a, const Real& b);
  friend bool operator<=(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b);
  friend bool operator>=(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);
  friend bool operator!=(const Real& a, const Real& b);

  friend Real sqrt(const Real& a);
  friend Real abs(const Real& a);
  friend Real atan(const Real& a);
  friend Real asin_mpfr(const Real& a);
  friend Real sin(const Real& a);
  friend Real cos(const Real& a);

  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

 private:
  struct raw_tag {};
  Real(mpfr_prec_t bits, raw_tag);
  mpfr_t v_;
};

Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& v);

}  // namespace arcbound
