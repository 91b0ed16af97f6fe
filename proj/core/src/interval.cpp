#include "trigon/interval.hpp"

#include <algorithm>
#include <cassert>

#include "trigon/errors.hpp"

namespace trigon {

namespace {

long norm_prec(long prec_bits) { return std::max<long>(prec_bits, 16); }

// q reduced into [0, period) exactly.
mpq_class reduce_mod(const mpq_class& q, unsigned period) {
  mpq_class p(period);
  mpq_class f = q / p;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), f.get_num_mpz_t(), f.get_den_mpz_t());
  mpq_class r = q - mpq_class(fl) * p;
  r.canonicalize();
  return r;
}

}  // namespace

Interval::Interval(long prec_bits) : prec_(norm_prec(prec_bits)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, 16);
  mpfr_init2(hi_, 16);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const mpq_class& q, long prec_bits) {
  Interval r(prec_bits);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

namespace {

// Enclosure of qr*pi for exact rational qr > 0.
void theta_bounds(const mpq_class& qr, long prec, mpfr_ptr th_lo,
                  mpfr_ptr th_hi) {
  mpfr_t pi_v, qf;
  mpfr_inits2(prec, pi_v, qf, (mpfr_ptr) nullptr);
  mpfr_const_pi(pi_v, MPFR_RNDD);
  mpfr_set_q(qf, qr.get_mpq_t(), MPFR_RNDD);
  mpfr_mul(th_lo, qf, pi_v, MPFR_RNDD);
  mpfr_const_pi(pi_v, MPFR_RNDU);
  mpfr_set_q(qf, qr.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(th_hi, qf, pi_v, MPFR_RNDU);
  mpfr_clears(pi_v, qf, (mpfr_ptr) nullptr);
}

// True iff [th_lo, th_hi] provably avoids c*pi (c rational, th > 0).
bool strictly_beside(mpfr_srcptr th_lo, mpfr_srcptr th_hi, const mpq_class& c,
                     long prec) {
  mpfr_t b, qf;
  mpfr_inits2(prec, b, qf, (mpfr_ptr) nullptr);
  mpfr_const_pi(b, MPFR_RNDD);
  mpfr_set_q(qf, c.get_mpq_t(), MPFR_RNDD);
  mpfr_mul(b, b, qf, MPFR_RNDD);
  const bool above = mpfr_cmp(th_lo, b) > 0;
  mpfr_const_pi(b, MPFR_RNDU);
  mpfr_set_q(qf, c.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(b, b, qf, MPFR_RNDU);
  const bool below = mpfr_cmp(th_hi, b) < 0;
  mpfr_clears(b, qf, (mpfr_ptr) nullptr);
  return above || below;
}

}  // namespace

Interval Interval::tan_pi(const mpq_class& q, long prec_bits) {
  const mpq_class qr = reduce_mod(q, 1);  // tan has period pi
  Interval r(prec_bits);
  if (qr == 0) return r;
  if (qr == mpq_class(1, 2))
    throw Error(Errc::out_of_domain, "tangent pole at an odd multiple of pi/2");
  // theta = qr*pi lies strictly inside (0, pi/2) or (pi/2, pi), one
  // monotone increasing branch, provided the enclosure stays clear of
  // the pole.
  mpfr_t th_lo, th_hi;
  mpfr_inits2(r.prec_, th_lo, th_hi, (mpfr_ptr) nullptr);
  theta_bounds(qr, r.prec_, th_lo, th_hi);
  const bool safe = strictly_beside(th_lo, th_hi, mpq_class(1, 2), r.prec_);
  if (!safe) {
    mpfr_clears(th_lo, th_hi, (mpfr_ptr) nullptr);
    throw Error(Errc::precision_insufficient,
                "tangent argument enclosure touches the pole");
  }
  mpfr_tan(r.lo_, th_lo, MPFR_RNDD);
  mpfr_tan(r.hi_, th_hi, MPFR_RNDU);
  mpfr_clears(th_lo, th_hi, (mpfr_ptr) nullptr);
  return r;
}

Interval Interval::sin_pi(const mpq_class& q, long prec_bits) {
  const mpq_class qr = reduce_mod(q, 2);  // sin has period 2*pi
  Interval r(prec_bits);
  if (qr == 0 || qr == 1) return r;
  if (qr == mpq_class(1, 2)) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDN);
    mpfr_set_si(r.hi_, 1, MPFR_RNDN);
    return r;
  }
  if (qr == mpq_class(3, 2)) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDN);
    mpfr_set_si(r.hi_, -1, MPFR_RNDN);
    return r;
  }
  mpfr_t th_lo, th_hi, s0, s1;
  mpfr_inits2(r.prec_, th_lo, th_hi, s0, s1, (mpfr_ptr) nullptr);
  theta_bounds(qr, r.prec_, th_lo, th_hi);
  // Endpoint values bound the range iff sin is monotone over the
  // enclosure, i.e. the enclosure avoids the critical arguments pi/2
  // and 3*pi/2 (the exact hits were handled above).
  const bool safe =
      strictly_beside(th_lo, th_hi, mpq_class(1, 2), r.prec_) &&
      strictly_beside(th_lo, th_hi, mpq_class(3, 2), r.prec_);
  mpfr_sin(s0, th_lo, MPFR_RNDD);
  mpfr_sin(s1, th_hi, MPFR_RNDD);
  mpfr_min(r.lo_, s0, s1, MPFR_RNDD);
  mpfr_sin(s0, th_lo, MPFR_RNDU);
  mpfr_sin(s1, th_hi, MPFR_RNDU);
  mpfr_max(r.hi_, s0, s1, MPFR_RNDU);
  if (!safe) {
    // May contain a critical point; widen to the attainable extremes.
    mpfr_set_si(r.lo_, -1, MPFR_RNDN);
    mpfr_set_si(r.hi_, 1, MPFR_RNDN);
  }
  mpfr_clears(th_lo, th_hi, s0, s1, (mpfr_ptr) nullptr);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t, best;
  mpfr_inits2(r.prec_, t, best, (mpfr_ptr) nullptr);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, best) < 0) mpfr_set(best, t, MPFR_RNDD);
      first = false;
    }
  mpfr_set(r.lo_, best, MPFR_RNDD);
  first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, best) > 0) mpfr_set(best, t, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.hi_, best, MPFR_RNDU);
  mpfr_clears(t, best, (mpfr_ptr) nullptr);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw Error(Errc::precision_insufficient,
                "divisor interval contains zero");
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t, best;
  mpfr_inits2(r.prec_, t, best, (mpfr_ptr) nullptr);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, best) < 0) mpfr_set(best, t, MPFR_RNDD);
      first = false;
    }
  mpfr_set(r.lo_, best, MPFR_RNDD);
  first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, best) > 0) mpfr_set(best, t, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.hi_, best, MPFR_RNDU);
  mpfr_clears(t, best, (mpfr_ptr) nullptr);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::is_exact_zero() const {
  return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::certainly_less(const Interval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

int Interval::compare_bounds(const Interval& o) const {
  const int c = mpfr_cmp(lo_, o.lo_);
  if (c != 0) return c;
  return mpfr_cmp(hi_, o.hi_);
}

double Interval::midpoint_double() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Interval::decimal(int significant_digits) const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", significant_digits, m);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(m);
  return out;
}

}  // namespace trigon
