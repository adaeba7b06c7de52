#include "arcbound/real.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace arcbound {

namespace {

void check_bits(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 20) {
    throw std::invalid_argument("Real: precision out of range: " +
                                std::to_string(static_cast<long>(bits)));
  }
}

mpfr_prec_t wider(const Real& a, const Real& b) {
  return std::max(a.bits(), b.bits());
}

}  // namespace

Real::Real(mpfr_prec_t bits, raw_tag) {
  check_bits(bits);
  mpfr_init2(v_, bits);
}

Real::Real() : Real(64, Real::raw_tag{}) {}

Real Real::with_bits(mpfr_prec_t bits) { return Real(bits, Real::raw_tag{}); }

Real::Real(double v, mpfr_prec_t bits) : Real(bits, Real::raw_tag{}) {
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long v, mpfr_prec_t bits) : Real(bits, Real::raw_tag{}) {
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real Real::from_decimal(std::string_view text, mpfr_prec_t bits) {
  Real r(bits, Real::raw_tag{});
  std::string buf(text);
  char* end = nullptr;
  int rc = mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
  (void)rc;
  if (end == buf.c_str() || *end != '\0') {
    throw std::invalid_argument("Real: malformed decimal literal: " + buf);
  }
  return r;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits, Real::raw_tag{});
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt2(mpfr_prec_t bits) {
  Real r(bits, Real::raw_tag{});
  mpfr_sqrt_ui(r.v_, 2, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t bits) {
  Real r(bits, Real::raw_tag{});
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

mpfr_prec_t Real::bits() const { return mpfr_get_prec(v_); }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

long Real::to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

bool Real::is_nan() const { return mpfr_nan_p(v_) != 0; }

bool Real::is_finite() const { return mpfr_number_p(v_) != 0; }

int Real::sign() const {
  if (is_nan()) return 0;
  return mpfr_sgn(v_);
}

Real Real::round_to(mpfr_prec_t bits) const {
  Real r(bits, Real::raw_tag{});
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (digits < 1) throw std::invalid_argument("Real::str: digits must be >= 1");
  int need = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  if (need < 0) throw std::runtime_error("Real::str: formatting failed");
  std::vector<char> buf(static_cast<size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

Real Real::operator-() const {
  Real r(bits(), Real::raw_tag{});
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::raw_tag{});
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::raw_tag{});
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::raw_tag{});
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::raw_tag{});
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b) {
  Real r(b.bits(), Real::raw_tag{});
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b) {
  Real r(b.bits(), Real::raw_tag{});
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real Real::mul_pow2(long e) const {
  Real r(bits(), Real::raw_tag{});
  mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

Real sqrt(const Real& a) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real atan(const Real& a) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_atan(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real asin_mpfr(const Real& a) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_asin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real sin(const Real& a) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real cos(const Real& a) {
  Real r(a.bits(), Real::raw_tag{});
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Real& v) {
  return os << v.str(20);
}

}  // namespace arcbound
