#include <gmpxx.h>
#include <mpfr.h>

#include "doctest.h"
#include "trigon/errors.hpp"
#include "trigon/interval.hpp"

using namespace trigon;

namespace {

constexpr long kPrec = 128;

Interval iv(long num, long den = 1) {
  return Interval::from_rational(mpq_class(num, den), kPrec);
}

// Exact membership; doubles are too coarse to probe 128-bit endpoints.
bool contains_q(const Interval& v, long num, long den = 1) {
  const mpq_class q(num, den);
  return mpfr_cmp_q(v.lo(), q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(v.hi(), q.get_mpq_t()) >= 0;
}

bool tight(const Interval& v, double x) {
  return v.midpoint_double() == doctest::Approx(x).epsilon(1e-12);
}

}  // namespace

TEST_CASE("rationals round outward") {
  // 1/3 is not a binary fraction, so the endpoints must differ and
  // bracket the true value.
  const Interval third = iv(1, 3);
  CHECK(mpfr_cmp(third.lo(), third.hi()) < 0);
  CHECK(contains_q(third, 1, 3));
  // Dyadic rationals are exact.
  const Interval half = iv(1, 2);
  CHECK(mpfr_cmp(half.lo(), half.hi()) == 0);
}

TEST_CASE("arithmetic encloses the exact value") {
  const Interval a = iv(1, 3);
  const Interval b = iv(1, 6);
  CHECK(contains_q(a + b, 1, 2));
  CHECK(contains_q(a - b, 1, 6));
  CHECK(contains_q(a * b, 1, 18));
  CHECK(contains_q(a / b, 2));
  CHECK(contains_q(-a, -1, 3));
  CHECK(contains_q(iv(-2).abs(), 2));
  CHECK(iv(-2).abs().is_positive());
}

TEST_CASE("division by a zero-containing interval is refused") {
  // 1/3 rounds outward, so subtracting it from itself straddles zero.
  const Interval straddle = iv(1, 3) - iv(1, 3);
  CHECK(straddle.contains_zero());
  try {
    (void)(iv(1) / straddle);
    FAIL("expected precision failure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precision_insufficient);
  }
  CHECK_THROWS_AS((void)(iv(1) / iv(0)), Error);
}

TEST_CASE("tangent of rational multiples of pi") {
  CHECK(Interval::tan_pi(mpq_class(0), kPrec).is_exact_zero());
  CHECK(Interval::tan_pi(mpq_class(1), kPrec).is_exact_zero());
  const Interval quarter = Interval::tan_pi(mpq_class(1, 4), kPrec);
  CHECK(contains_q(quarter, 1));
  CHECK(quarter.is_positive());
  const Interval eighth = Interval::tan_pi(mpq_class(1, 8), kPrec);
  CHECK(tight(eighth, 0.41421356237309503));
  const Interval neg = Interval::tan_pi(mpq_class(-1, 3), kPrec);
  CHECK(neg.is_negative());
  CHECK(tight(neg, -1.7320508075688772));
  try {
    Interval::tan_pi(mpq_class(1, 2), kPrec);
    FAIL("expected the pole to be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::out_of_domain);
  }
  CHECK_THROWS_AS(Interval::tan_pi(mpq_class(3, 2), kPrec), Error);
}

TEST_CASE("sine of rational multiples of pi") {
  CHECK(Interval::sin_pi(mpq_class(0), kPrec).is_exact_zero());
  CHECK(Interval::sin_pi(mpq_class(1), kPrec).is_exact_zero());
  CHECK(Interval::sin_pi(mpq_class(-2), kPrec).is_exact_zero());
  const Interval top = Interval::sin_pi(mpq_class(1, 2), kPrec);
  CHECK(mpfr_cmp_si(top.lo(), 1) == 0);
  CHECK(mpfr_cmp_si(top.hi(), 1) == 0);
  const Interval bottom = Interval::sin_pi(mpq_class(3, 2), kPrec);
  CHECK(mpfr_cmp_si(bottom.lo(), -1) == 0);
  const Interval sixth = Interval::sin_pi(mpq_class(1, 6), kPrec);
  CHECK(contains_q(sixth, 1, 2));
  CHECK(Interval::sin_pi(mpq_class(5, 6), kPrec).is_positive());
  CHECK(Interval::sin_pi(mpq_class(7, 6), kPrec).is_negative());
}

TEST_CASE("ordering predicates") {
  const Interval a = iv(1, 3);
  const Interval b = iv(1, 2);
  CHECK(a.certainly_less(b));
  CHECK_FALSE(b.certainly_less(a));
  CHECK_FALSE(a.certainly_less(a));  // same interval overlaps itself
  CHECK(a.overlaps(a));
  CHECK_FALSE(a.overlaps(b));
  CHECK(a.compare_bounds(b) < 0);
  CHECK(b.compare_bounds(a) > 0);
  CHECK(a.compare_bounds(a) == 0);
  CHECK(iv(0).is_exact_zero());
  CHECK(iv(0).contains_zero());
  CHECK_FALSE(iv(1, 1000000).contains_zero());
}

TEST_CASE("decimal rendering tracks the midpoint") {
  CHECK(iv(1, 2).decimal(3) == "0.5");
  const Interval q = iv(-7, 4);
  CHECK(q.midpoint_double() == doctest::Approx(-1.75));
}
