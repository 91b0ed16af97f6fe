#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>

#include "trigon/interval.hpp"

namespace trigon {

// Exact real number stored as an expression over rationals and tan/sin
// of rational multiples of pi. Evaluation produces a certified
// enclosure at any requested precision, so a decision that failed at
// one precision can be retried tighter without losing exactness.
//
// Evaluations cache per node; not safe for concurrent use on the same
// expression graph.
class Real {
 public:
  Real();  // zero
  static Real rational(mpq_class q);
  static Real integer(long v);
  static Real tan_pi(mpq_class q);  // tan(q*pi)
  static Real sin_pi(mpq_class q);  // sin(q*pi)

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  friend Real abs(const Real& a);

  Interval eval(long prec_bits) const;

  // Exact structure probes, used for pattern checks and serialization.
  std::optional<mpq_class> as_rational() const;
  // q normalized into (-1/2, 1/2] when the value is tan(q*pi).
  std::optional<mpq_class> as_tan_pi() const;

 private:
  struct Node;
  explicit Real(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
};

}  // namespace trigon
