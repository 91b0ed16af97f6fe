#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace trigon {

// Closed interval [lo, hi] with directed-rounded MPFR endpoints. Every
// operation returns an interval guaranteed to contain the exact result.
class Interval {
 public:
  explicit Interval(long prec_bits);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  long precision() const { return prec_; }

  static Interval from_rational(const mpq_class& q, long prec_bits);
  // tan(q*pi); q = 1/2 mod 1 (a pole) is out of domain.
  static Interval tan_pi(const mpq_class& q, long prec_bits);
  // sin(q*pi); exact at the multiples of 1/2.
  static Interval sin_pi(const mpq_class& q, long prec_bits);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws precision-insufficient when b straddles zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;
  Interval abs() const;

  bool is_positive() const;       // certified > 0
  bool is_negative() const;       // certified < 0
  bool is_exact_zero() const;
  bool contains_zero() const;
  bool certainly_less(const Interval& o) const;  // hi < o.lo
  bool overlaps(const Interval& o) const;
  // Total order for sorting: by (lo, hi). Equal intervals compare equal.
  int compare_bounds(const Interval& o) const;

  double midpoint_double() const;
  std::string decimal(int significant_digits) const;  // of the midpoint

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

 private:
  long prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace trigon
