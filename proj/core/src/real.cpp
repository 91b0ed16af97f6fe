#include "trigon/real.hpp"

#include <stdexcept>
#include <utility>

namespace trigon {

struct Real::Node {
  enum class Kind { rational, tan_pi, sin_pi, add, sub, mul, div, neg, abs };
  Kind kind;
  mpq_class q;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  mutable long cached_prec = 0;
  mutable std::optional<Interval> cache;

  Interval eval(long prec) const;

  static std::shared_ptr<const Node> leaf(Kind k, mpq_class q) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->q = std::move(q);
    return n;
  }
  static std::shared_ptr<const Node> unary(Kind k,
                                           std::shared_ptr<const Node> a) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    return n;
  }
  static std::shared_ptr<const Node> binary(Kind k,
                                            std::shared_ptr<const Node> a,
                                            std::shared_ptr<const Node> b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }
};

Interval Real::Node::eval(long prec) const {
  if (cache && cached_prec >= prec) return *cache;
  Interval r = [&]() -> Interval {
    switch (kind) {
      case Kind::rational:
        return Interval::from_rational(q, prec);
      case Kind::tan_pi:
        return Interval::tan_pi(q, prec);
      case Kind::sin_pi:
        return Interval::sin_pi(q, prec);
      case Kind::add:
        return a->eval(prec) + b->eval(prec);
      case Kind::sub:
        return a->eval(prec) - b->eval(prec);
      case Kind::mul:
        return a->eval(prec) * b->eval(prec);
      case Kind::div:
        return a->eval(prec) / b->eval(prec);
      case Kind::neg:
        return -a->eval(prec);
      case Kind::abs:
        return a->eval(prec).abs();
    }
    throw std::logic_error("unknown expression node");
  }();
  cache = r;
  cached_prec = prec;
  return *cache;
}

Real::Real() : node_(Real::Node::leaf(Real::Node::Kind::rational, mpq_class(0))) {}

Real::Real(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

Real Real::rational(mpq_class q) {
  q.canonicalize();
  return Real(Real::Node::leaf(Real::Node::Kind::rational, std::move(q)));
}

Real Real::integer(long v) { return rational(mpq_class(v)); }

Real Real::tan_pi(mpq_class q) {
  q.canonicalize();
  return Real(Real::Node::leaf(Real::Node::Kind::tan_pi, std::move(q)));
}

Real Real::sin_pi(mpq_class q) {
  q.canonicalize();
  return Real(Real::Node::leaf(Real::Node::Kind::sin_pi, std::move(q)));
}

Real operator+(const Real& a, const Real& b) {
  return Real(Real::Node::binary(Real::Node::Kind::add, a.node_, b.node_));
}

Real operator-(const Real& a, const Real& b) {
  return Real(Real::Node::binary(Real::Node::Kind::sub, a.node_, b.node_));
}

Real operator*(const Real& a, const Real& b) {
  return Real(Real::Node::binary(Real::Node::Kind::mul, a.node_, b.node_));
}

Real operator/(const Real& a, const Real& b) {
  return Real(Real::Node::binary(Real::Node::Kind::div, a.node_, b.node_));
}

Real Real::operator-() const { return Real(Real::Node::unary(Real::Node::Kind::neg, node_)); }

Real abs(const Real& a) { return Real(Real::Node::unary(Real::Node::Kind::abs, a.node_)); }

Interval Real::eval(long prec_bits) const { return node_->eval(prec_bits); }

std::optional<mpq_class> Real::as_rational() const {
  if (node_->kind == Real::Node::Kind::rational) return node_->q;
  return std::nullopt;
}

std::optional<mpq_class> Real::as_tan_pi() const {
  if (node_->kind != Real::Node::Kind::tan_pi) return std::nullopt;
  // Normalize modulo the period into (-1/2, 1/2].
  mpq_class q = node_->q;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= mpq_class(fl);  // now in [0, 1)
  if (q > mpq_class(1, 2)) q -= 1;
  q.canonicalize();
  return q;
}

}  // namespace trigon
