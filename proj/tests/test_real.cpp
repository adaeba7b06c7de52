#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "arcbound/real.hpp"

using arcbound::Real;

TEST_CASE("default constructed value is nan") {
  Real r;
  CHECK(r.is_nan());
  CHECK_FALSE(r.is_finite());
  CHECK(r.sign() == 0);
}

TEST_CASE("integer and double constructors round-trip") {
  CHECK(Real(2L, 64).to_double() == 2.0);
  CHECK(Real(-7L, 64).to_long() == -7);
  CHECK(Real(0.625, 64).to_double() == 0.625);
  CHECK(Real(3L, 256).bits() == 256);
}

TEST_CASE("decimal parsing") {
  const Real r = Real::from_decimal("1.5e-3", 128);
  CHECK(r.to_double() == doctest::Approx(0.0015).epsilon(1e-15));
  CHECK(Real::from_decimal("-2", 64).to_long() == -2);

  CHECK_THROWS_AS((void)Real::from_decimal("abc", 64), std::invalid_argument);
  CHECK_THROWS_AS((void)Real::from_decimal("1.5x", 64), std::invalid_argument);
  CHECK_THROWS_AS((void)Real::from_decimal("", 64), std::invalid_argument);
}

TEST_CASE("string rendering parses back to the same value") {
  const Real pi = Real::pi(128);
  // 42 digits carry more information than 128 bits.
  const Real back = Real::from_decimal(pi.str(42), 128);
  CHECK(back == pi);
}

TEST_CASE("arithmetic widens to the larger operand precision") {
  const Real narrow(1L, 64);
  const Real wide(1L, 256);
  CHECK((narrow + wide).bits() == 256);
  CHECK((wide * narrow).bits() == 256);
  CHECK((narrow - wide).sign() == 0);
}

TEST_CASE("mul_pow2 is exact scaling") {
  const Real x = Real::from_decimal("3.141592653589793", 64);
  CHECK(x.mul_pow2(3) == x * 8L);
  CHECK(x.mul_pow2(-1) == x / 2L);
  CHECK(x.mul_pow2(0) == x);
}

TEST_CASE("pow2 hits exact powers") {
  CHECK(Real::pow2(0, 64).to_double() == 1.0);
  CHECK(Real::pow2(-3, 64).to_double() == 0.125);
  CHECK(Real::pow2(10, 64).to_long() == 1024);
}

TEST_CASE("mixed integer operands on both sides") {
  const Real x(10L, 64);
  CHECK((x + 5L).to_long() == 15);
  CHECK((5L + x).to_long() == 15);
  CHECK((x - 3L).to_long() == 7);
  CHECK((3L - x).to_long() == -7);
  CHECK((x * 2L).to_long() == 20);
  CHECK((2L * x).to_long() == 20);
  CHECK((x / 2L).to_long() == 5);
  CHECK((20L / x).to_long() == 2);
}

TEST_CASE("comparisons are nan safe") {
  const Real nan;
  const Real one(1L, 64);
  CHECK_FALSE(nan < one);
  CHECK_FALSE(nan > one);
  CHECK_FALSE(nan == one);
  CHECK(nan != one);
  CHECK(one <= one);
  CHECK(one >= one);
}

TEST_CASE("round_to changes precision and re-rounds") {
  const Real pi = Real::pi(256);
  const Real down = pi.round_to(64);
  CHECK(down.bits() == 64);
  CHECK(abs(down - pi) < Real::pow2(-60, 64));
  CHECK(down != pi);
}

TEST_CASE("pi and sqrt2 satisfy their defining relations") {
  const Real pi = Real::pi(256);
  const Real r2 = Real::sqrt2(256);
  CHECK(abs(r2 * r2 - 2L) < Real::pow2(-250, 64));
  CHECK(abs(sin(pi)) < Real::pow2(-250, 64));
}

TEST_CASE("unary functions") {
  const Real four(4L, 128);
  CHECK(sqrt(four).to_long() == 2);
  CHECK(abs(Real(-3L, 64)).to_long() == 3);
  CHECK((-Real(3L, 64)).to_long() == -3);
  CHECK(atan(Real(1L, 256)) == Real::pi(256).mul_pow2(-2));
  CHECK(asin_mpfr(Real(1L, 256)) == Real::pi(256).mul_pow2(-1));
  CHECK(cos(Real(0L, 64)).to_long() == 1);
}

TEST_CASE("min max") {
  const Real a(1L, 64);
  const Real b(2L, 64);
  CHECK(arcbound::min(a, b) == a);
  CHECK(arcbound::max(a, b) == b);
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Real(1L, 64).mul_pow2(-1);
  CHECK(os.str() == "5.0000000000000000000e-01");
}

TEST_CASE("copy and move preserve value and width") {
  Real a = Real::pi(192);
  Real b = a;
  CHECK(b == a);
  CHECK(b.bits() == 192);
  Real c = std::move(a);
  CHECK(c == b);
  a = b;
  CHECK(a == c);
}

TEST_CASE("precision bounds are enforced") {
  CHECK_THROWS_AS((void)Real::with_bits(0), std::invalid_argument);
  CHECK_THROWS_AS((void)Real(1L, 1 << 21), std::invalid_argument);
}
