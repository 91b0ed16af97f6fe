#include "trigon/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "trigon/errors.hpp"

namespace trigon {

namespace {

mpq_class pow10_q(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

mpq_class pow_int(long base, unsigned exp) {
  mpz_class b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return mpq_class(r);
}

mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

template <typename F>
auto retry_precision(long start, F&& f) -> decltype(f(start)) {
  long prec = std::max<long>(start, 16);
  for (;;) {
    try {
      return f(prec);
    } catch (const Error& e) {
      if (e.code() != Errc::precision_insufficient) throw;
      if (prec >= kMaxPrecision)
        throw Error(Errc::precision_insufficient,
                    std::string(e.what()) + " (at the precision cap)");
      prec = std::min(prec * 2, kMaxPrecision);
    }
  }
}

bool same_rational(const Real& a, const Real& b) {
  const auto ra = a.as_rational();
  const auto rb = b.as_rational();
  if (ra && rb) return *ra == *rb;
  const auto ta = a.as_tan_pi();
  const auto tb = b.as_tan_pi();
  return ta && tb && *ta == *tb;
}

Real crossing_x_expr(const Line& p, const Line& q) {
  return (p.slope * p.anchor - q.slope * q.anchor) / (p.slope - q.slope);
}

Real crossing_y_expr(const Line& p, const Line& q) {
  return p.slope * (crossing_x_expr(p, q) - p.anchor);
}

std::vector<int> slope_ranks_at(const LineArrangement& a, long prec) {
  const int n = static_cast<int>(a.lines.size());
  std::vector<Interval> sl;
  sl.reserve(n);
  for (const Line& l : a.lines) sl.push_back(l.slope.eval(prec));
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (sl[i].certainly_less(sl[j])) return true;
    if (sl[j].certainly_less(sl[i])) return false;
    if (same_rational(a.lines[i].slope, a.lines[j].slope))
      throw Error(Errc::invalid_arrangement,
                  "lines " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " are parallel");
    throw Error(Errc::precision_insufficient,
                "cannot separate the slopes of lines " + std::to_string(i + 1) +
                    " and " + std::to_string(j + 1));
  });
  std::vector<int> wire(n);
  for (int r = 0; r < n; ++r) wire[idx[r]] = r + 1;
  return wire;
}

std::vector<Crossing> crossings_at(const LineArrangement& a, long prec) {
  const int n = static_cast<int>(a.lines.size());
  std::vector<Crossing> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Interval denom = (a.lines[i].slope - a.lines[j].slope).eval(prec);
      if (denom.contains_zero()) {
        if (same_rational(a.lines[i].slope, a.lines[j].slope))
          throw Error(Errc::invalid_arrangement,
                      "lines " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " are parallel");
        throw Error(Errc::precision_insufficient,
                    "cannot separate the slopes of lines " +
                        std::to_string(i + 1) + " and " +
                        std::to_string(j + 1));
      }
      const Real x = crossing_x_expr(a.lines[i], a.lines[j]);
      const Real y = crossing_y_expr(a.lines[i], a.lines[j]);
      out.push_back(Crossing{i, j, x.eval(prec), y.eval(prec)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& p, const Crossing& q) {
    const int c = p.x.compare_bounds(q.x);
    if (c != 0) return c < 0;
    return std::pair(p.i, p.j) < std::pair(q.i, q.j);
  });
  return out;
}

WiringDiagram to_wiring_at(const LineArrangement& a, long prec) {
  const int n = static_cast<int>(a.lines.size());
  if (n < 1) throw Error(Errc::invalid_parameter, "empty arrangement");
  const std::vector<int> wire = slope_ranks_at(a, prec);
  const std::vector<Crossing> xs = crossings_at(a, prec);

  std::vector<int> pos_of(n + 1), wire_at(n + 1);
  std::iota(pos_of.begin(), pos_of.end(), 0);
  std::iota(wire_at.begin(), wire_at.end(), 0);

  std::vector<Column> cols;
  std::size_t k = 0;
  while (k < xs.size()) {
    // Group crossings whose x enclosures overlap in a chain; groups are
    // then certifiably ordered against each other.
    std::size_t e = k + 1;
    const Interval* hull_hi = &xs[k].x;
    while (e < xs.size() &&
           mpfr_cmp(xs[e].x.lo(), hull_hi->hi()) <= 0) {
      if (mpfr_cmp(xs[e].x.hi(), hull_hi->hi()) > 0) hull_hi = &xs[e].x;
      ++e;
    }
    Column col;
    for (std::size_t t = k; t < e; ++t) {
      const int pi = pos_of[wire[xs[t].i]];
      const int pj = pos_of[wire[xs[t].j]];
      if (pi != pj + 1 && pj != pi + 1)
        throw Error(Errc::precision_insufficient,
                    "crossings too close in x to order");
      col.rows.push_back(std::min(pi, pj));
    }
    std::sort(col.rows.begin(), col.rows.end());
    for (std::size_t t = 1; t < col.rows.size(); ++t) {
      if (col.rows[t] - col.rows[t - 1] < 2)
        throw Error(Errc::precision_insufficient,
                    "crossings too close in x to order");
    }
    for (int r : col.rows) {
      const int wu = wire_at[r];
      const int wv = wire_at[r + 1];
      wire_at[r] = wv;
      wire_at[r + 1] = wu;
      pos_of[wu] = r + 1;
      pos_of[wv] = r;
    }
    cols.push_back(std::move(col));
    k = e;
  }
  return WiringDiagram::from_columns(n, cols);
}

// ----- builtin constructions -----

LineArrangement hex_lines(const mpq_class& eps) {
  LineArrangement a;
  a.precision = kDefaultPrecision;
  a.lines = {
      {Real::integer(3), Real::tan_pi(frac(-1, 3))},
      {Real::integer(1), Real::tan_pi(frac(-1, 6))},
      {Real::integer(0), Real::rational(0)},
      {Real::integer(-1), Real::tan_pi(frac(1, 6))},
      {Real::integer(-3), Real::tan_pi(frac(1, 3))},
      {Real::integer(-7), Real::rational(-eps)},
      {Real::integer(7), Real::rational(eps)},
  };
  return a;
}

LineArrangement simmons_lines(const mpq_class& eps) {
  LineArrangement a;
  a.precision = kDefaultPrecision;
  a.lines = {
      {Real::rational(frac(166, 100)), Real::tan_pi(frac(-6, 14))},
      {Real::rational(frac(44, 10)), Real::tan_pi(frac(-5, 14))},
      {Real::rational(frac(328, 100)), Real::tan_pi(frac(-4, 14))},
      {Real::rational(frac(144, 10)), Real::tan_pi(frac(-3, 14))},
      {Real::rational(frac(131, 10)), Real::tan_pi(frac(-2, 14))},
      {Real::integer(-65), Real::tan_pi(frac(-1, 14))},
      {Real::integer(0), Real::rational(0)},
      {Real::integer(-52), Real::tan_pi(frac(1, 14))},
      {Real::rational(frac(-124, 10)), Real::tan_pi(frac(2, 14))},
      {Real::integer(-22), Real::tan_pi(frac(3, 14))},
      {Real::rational(frac(-48, 10)), Real::tan_pi(frac(4, 14))},
      {Real::rational(frac(-53, 10)), Real::tan_pi(frac(5, 14))},
      {Real::rational(frac(-186, 100)), Real::tan_pi(frac(6, 14))},
      {Real::integer(50), Real::rational(-eps)},
      {Real::integer(-45), Real::rational(eps)},
  };
  return a;
}

LineArrangement certify_builtin(LineArrangement a, long want_triangles,
                                int want_contact, bool want_perfect) {
  const int h = horizontal_index(a);
  return retry_precision(a.precision, [&](long prec) {
    const WiringDiagram d = to_wiring_at(a, prec);
    const FaceReport rep = count_triangles(d);
    const std::vector<int> wire = slope_ranks_at(a, prec);
    if (rep.triangle_count != want_triangles)
      throw Error(Errc::construction_failed,
                  "recount gave " + std::to_string(rep.triangle_count) +
                      " triangles, expected " + std::to_string(want_triangles));
    if (rep.wire_contact[wire[h]] != want_contact)
      throw Error(Errc::construction_failed,
                  "horizontal line touches " +
                      std::to_string(rep.wire_contact[wire[h]]) +
                      " triangles, expected " + std::to_string(want_contact));
    if (want_perfect && !rep.unused.empty())
      throw Error(Errc::construction_failed,
                  std::to_string(rep.unused.size()) +
                      " unused segments in a perfect construction");
    a.precision = prec;
    return a;
  });
}

int certified_sign(const Interval& v, const char* what) {
  if (v.is_positive()) return 1;
  if (v.is_negative()) return -1;
  if (v.is_exact_zero())
    throw Error(Errc::precondition_failed,
                std::string(what) + " is exactly zero");
  throw Error(Errc::precision_insufficient,
              std::string("cannot certify the sign of ") + what);
}

LineArrangement duplicate_at(const LineArrangement& a, int n, int h,
                             long prec) {
  // Classify the non-horizontal anchors: two inside (-1/n, 1/n), the
  // rest matching tan(k*pi/n) for k = +-1 .. +-(n/2 - 1).
  const Interval tol = Interval::from_rational(frac(1, n), prec);
  std::vector<int> near_zero, patterned;
  for (int i = 0; i < static_cast<int>(a.lines.size()); ++i) {
    if (i == h) continue;
    const Interval av = a.lines[i].anchor.eval(prec).abs();
    if (av.certainly_less(tol))
      near_zero.push_back(i);
    else if (tol.certainly_less(av))
      patterned.push_back(i);
    else
      throw Error(Errc::precision_insufficient,
                  "anchor of line " + std::to_string(i + 1) +
                      " cannot be placed against 1/n");
  }
  if (near_zero.size() != 2)
    throw Error(Errc::precondition_failed,
                "expected exactly two anchors within 1/n of zero, found " +
                    std::to_string(near_zero.size()));

  std::map<mpq_class, int> expected;
  for (int k = 1; k <= n / 2 - 1; ++k) {
    ++expected[frac(k, n)];
    ++expected[frac(-k, n)];
  }
  for (int i : patterned) {
    bool matched = false;
    if (const auto q = a.lines[i].anchor.as_tan_pi()) {
      const auto it = expected.find(*q);
      if (it != expected.end() && it->second > 0) {
        --it->second;
        matched = true;
      }
    }
    if (!matched) {
      // Anchors from decimal input lose the tan structure; accept an
      // unambiguous enclosure match, the final recount still decides.
      const Interval av = a.lines[i].anchor.eval(prec);
      std::map<mpq_class, int>::iterator hit = expected.end();
      int hits = 0;
      for (auto it = expected.begin(); it != expected.end(); ++it) {
        if (it->second > 0 && av.overlaps(Interval::tan_pi(it->first, prec))) {
          ++hits;
          hit = it;
        }
      }
      if (hits > 1)
        throw Error(Errc::precision_insufficient,
                    "anchor of line " + std::to_string(i + 1) +
                        " matches several pattern values");
      if (hits == 1) {
        --hit->second;
        matched = true;
      }
    }
    if (!matched)
      throw Error(Errc::precondition_failed,
                  "anchor of line " + std::to_string(i + 1) +
                      " does not match the tan(k*pi/n) pattern");
  }

  int i_neg = near_zero[0];
  int i_pos = near_zero[1];
  const int s0 =
      certified_sign(a.lines[i_neg].anchor.eval(prec), "a near-zero anchor");
  const int s1 =
      certified_sign(a.lines[i_pos].anchor.eval(prec), "a near-zero anchor");
  if (s0 == s1)
    throw Error(Errc::precondition_failed,
                "the two near-zero anchors must straddle zero");
  if (s0 > 0) std::swap(i_neg, i_pos);

  // Seed conversion, count and horizontal contact.
  const WiringDiagram da = to_wiring_at(a, prec);
  const FaceReport ra = count_triangles(da);
  const std::vector<int> wires_a = slope_ranks_at(a, prec);
  if (ra.wire_contact[wires_a[h]] != n - 1)
    throw Error(Errc::precondition_failed,
                "horizontal line touches " +
                    std::to_string(ra.wire_contact[wires_a[h]]) +
                    " triangles, needs exactly " + std::to_string(n - 1));

  const int sigma =
      certified_sign(crossing_y_expr(a.lines[i_pos], a.lines[i_neg]).eval(prec),
                     "the crossing height of the two near-zero lines");

  // Smallest slope magnitude among the non-horizontal lines. Ties keep
  // the first line; exactly tied magnitudes give the same value.
  int argmin = -1;
  for (int i = 0; i < static_cast<int>(a.lines.size()); ++i) {
    if (i == h) continue;
    if (argmin < 0) {
      argmin = i;
      continue;
    }
    const Interval cand = abs(a.lines[i].slope).eval(prec);
    const Interval cur = abs(a.lines[argmin].slope).eval(prec);
    if (cand.certainly_less(cur)) argmin = i;
  }
  const Real m_min = abs(a.lines[argmin].slope);

  // The new, almost horizontal lines.
  const mpq_class inv_n6 = mpq_class(1) / pow_int(n, 6);
  const mpq_class inv_n9 = mpq_class(1) / pow_int(n, 9);
  const mpq_class inv_n10 = mpq_class(1) / pow_int(n, 10);
  const mpq_class inv_n11 = mpq_class(1) / pow_int(n, 11);
  std::vector<Line> fresh;
  std::vector<Real> sin2b;
  for (int k = 1; k <= n; ++k) {
    const Real b = Real::tan_pi(frac(2 * k - 1 - n, 2 * n));
    const Real s2 = Real::sin_pi(frac(2 * k - 1 - n, n));
    const Real mu = Real::integer(sigma) * (m_min * Real::rational(inv_n10)) *
                    (s2 + Real::rational(inv_n6) / b);
    fresh.push_back(Line{mu, b});
    sin2b.push_back(s2);
  }

  // Slope magnitude window and sign coherence. The magnitudes lie in
  // (m_min/n^11, 2*m_min/n^10) and the slope sign equals sigma times
  // the shared sign of sin(2*beta) and tan(beta).
  const Interval lo_bound = (m_min * Real::rational(inv_n11)).eval(prec);
  const Interval hi_bound =
      (Real::integer(2) * m_min * Real::rational(inv_n10)).eval(prec);
  for (int k = 0; k < n; ++k) {
    const Interval mag = abs(fresh[k].slope).eval(prec);
    if (!lo_bound.certainly_less(mag) || !mag.certainly_less(hi_bound))
      throw Error(Errc::precision_insufficient,
                  "new slope magnitude bound not certified");
    const int s_mu = certified_sign(fresh[k].slope.eval(prec), "a new slope");
    const int s_s2 = certified_sign(sin2b[k].eval(prec), "sin(2*beta)");
    const int s_b = certified_sign(fresh[k].anchor.eval(prec), "tan(beta)");
    if (s_s2 != s_b || s_mu != sigma * s_s2)
      throw Error(Errc::construction_failed,
                  "sign coherence of the new slopes is violated");
  }

  // Every crossing of an old non-horizontal line with a new line stays
  // within |y| < 3*m_min/n^9.
  const Interval y_bound =
      (Real::integer(3) * m_min * Real::rational(inv_n9)).eval(prec);
  for (int i = 0; i < static_cast<int>(a.lines.size()); ++i) {
    if (i == h) continue;
    for (const Line& m : fresh) {
      const Interval y = crossing_y_expr(a.lines[i], m).eval(prec).abs();
      if (!y.certainly_less(y_bound))
        throw Error(Errc::precision_insufficient,
                    "crossing height bound not certified");
    }
  }

  LineArrangement b;
  b.lines = a.lines;
  b.lines.insert(b.lines.end(), fresh.begin(), fresh.end());
  b.precision = prec;

  const WiringDiagram db = to_wiring_at(b, prec);
  const FaceReport rb = count_triangles(db);
  const std::vector<int> wires_b = slope_ranks_at(b, prec);
  const long want = ra.triangle_count + static_cast<long>(n) * n;
  if (rb.triangle_count != want)
    throw Error(Errc::construction_failed,
                "recount gave " + std::to_string(rb.triangle_count) +
                    " triangles, expected " + std::to_string(want));
  if (rb.wire_contact[wires_b[h]] != 2 * n - 1)
    throw Error(Errc::construction_failed,
                "horizontal line touches " +
                    std::to_string(rb.wire_contact[wires_b[h]]) +
                    " triangles, expected " + std::to_string(2 * n - 1));
  return b;
}

}  // namespace

LineArrangement hexagonal7(const mpq_class& eps) {
  if (eps <= 0)
    throw Error(Errc::invalid_parameter, "eps must be positive");
  return certify_builtin(hex_lines(eps), 11, 5, false);
}

LineArrangement simmons15(const mpq_class& eps) {
  if (eps <= 0)
    throw Error(Errc::invalid_parameter, "eps must be positive");
  return certify_builtin(simmons_lines(eps), 65, 13, true);
}

LineArrangement duplicate(const LineArrangement& a) {
  const int n = static_cast<int>(a.lines.size()) - 1;
  if (n < 2 || n % 2 != 0)
    throw Error(Errc::precondition_failed,
                "need 2k+1 lines for even k >= 2, got " +
                    std::to_string(a.lines.size()));
  const int h = horizontal_index(a);
  if (h < 0)
    throw Error(Errc::precondition_failed,
                "need exactly one line with slope zero");
  return retry_precision(
      a.precision, [&](long prec) { return duplicate_at(a, n, h, prec); });
}

LineArrangement iterate_duplication(Seed seed, int t) {
  if (t < 0) throw Error(Errc::invalid_parameter, "t must be non-negative");
  const long base = seed == Seed::hexagonal7 ? 6 : 14;
  const long n_final = base << t;
  const mpq_class eps = mpq_class(1) / pow_int(n_final, 3);
  LineArrangement a =
      seed == Seed::hexagonal7 ? hexagonal7(eps) : simmons15(eps);
  for (int r = 0; r < t; ++r) a = duplicate(a);
  return a;
}

WiringDiagram to_wiring(const LineArrangement& a) {
  return to_wiring_at(a, a.precision);
}

std::vector<Crossing> crossings(const LineArrangement& a) {
  return crossings_at(a, a.precision);
}

std::vector<int> wire_of_line(const LineArrangement& a) {
  return slope_ranks_at(a, a.precision);
}

int horizontal_index(const LineArrangement& a) {
  int found = -1;
  for (int i = 0; i < static_cast<int>(a.lines.size()); ++i) {
    const auto q = a.lines[i].slope.as_rational();
    if (q && *q == 0) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

// ----- text format -----

namespace {

std::optional<std::string> exact_decimal(const mpq_class& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  const int k = std::max(twos, fives);
  mpz_class scaled = q.get_num();
  for (int i = 0; i < k - twos; ++i) scaled *= 2;
  for (int i = 0; i < k - fives; ++i) scaled *= 5;
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) <= k)
    digits.insert(0, k - digits.size() + 1, '0');
  std::string out = neg ? "-" : "";
  out += digits.substr(0, digits.size() - k);
  if (k > 0) out += "." + digits.substr(digits.size() - k);
  return out;
}

std::string value_text(const Real& v, long prec) {
  if (const auto t = v.as_tan_pi()) {
    if (*t == 0) return "0";
    return "tan(" + t->get_str() + "*pi)";
  }
  if (const auto q = v.as_rational()) {
    if (const auto d = exact_decimal(*q)) return *d;
  }
  const int digits = static_cast<int>(prec * 0.30103) + 5;
  return v.eval(prec).decimal(digits);
}

mpq_class parse_decimal(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
    neg = tok[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < tok.size(); ++pos) {
    const char c = tok[pos];
    if (c == '.') {
      if (seen_dot) throw Error::parse(line_no, "malformed number '" + tok + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      break;
    }
  }
  if (!seen_digit) throw Error::parse(line_no, "malformed number '" + tok + "'");
  long exp10 = 0;
  if (pos < tok.size() && (tok[pos] == 'e' || tok[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
      eneg = tok[pos] == '-';
      ++pos;
    }
    if (pos >= tok.size())
      throw Error::parse(line_no, "malformed exponent in '" + tok + "'");
    long e = 0;
    for (; pos < tok.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(tok[pos])))
        throw Error::parse(line_no, "malformed exponent in '" + tok + "'");
      e = e * 10 + (tok[pos] - '0');
      if (e > 1000000)
        throw Error::parse(line_no, "exponent out of range in '" + tok + "'");
    }
    exp10 = eneg ? -e : e;
  }
  if (pos != tok.size())
    throw Error::parse(line_no, "malformed number '" + tok + "'");
  // Base must be pinned: the default auto-detects and reads a leading
  // zero as octal.
  mpq_class v(mpz_class(digits.empty() ? "0" : digits, 10));
  v *= pow10_q(exp10 - frac_digits);
  v.canonicalize();
  return neg ? mpq_class(-v) : v;
}

Real parse_value(const std::string& tok, int line_no) {
  if (tok.rfind("tan(", 0) == 0) {
    const std::string suffix = "*pi)";
    if (tok.size() <= 4 + suffix.size() ||
        tok.compare(tok.size() - suffix.size(), suffix.size(), suffix) != 0)
      throw Error::parse(line_no, "malformed tangent literal '" + tok + "'");
    const std::string body = tok.substr(4, tok.size() - 4 - suffix.size());
    mpq_class q;
    if (q.set_str(body, 10) != 0 || q.get_den() == 0)
      throw Error::parse(line_no,
                         "malformed rational '" + body + "' in tangent literal");
    q.canonicalize();
    if (const mpq_class r = q - mpq_class(q.get_num() / q.get_den());
        r == mpq_class(1, 2) || r == mpq_class(-1, 2))
      throw Error::parse(line_no, "tangent literal at a pole");
    return Real::tan_pi(q);
  }
  return Real::rational(parse_decimal(tok, line_no));
}

}  // namespace

LineArrangement read_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  LineArrangement a;
  long k = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    if (k < 0) {
      std::string kw1, kw2;
      long prec = 0;
      if (!(row >> kw1 >> k >> kw2 >> prec) || kw1 != "lines" ||
          kw2 != "precision" || k < 1 || prec < 16)
        throw Error::parse(line_no,
                           "expected header 'lines <k> precision <bits>'");
      std::string extra;
      if (row >> extra) throw Error::parse(line_no, "trailing content in header");
      a.precision = prec;
      continue;
    }
    std::string ms, as, extra;
    if (!(row >> ms >> as))
      throw Error::parse(line_no, "expected 'slope anchor'");
    if (row >> extra) throw Error::parse(line_no, "trailing content");
    a.lines.push_back(Line{parse_value(ms, line_no), parse_value(as, line_no)});
  }
  if (k < 0) throw Error::parse(line_no, "missing header");
  if (static_cast<long>(a.lines.size()) != k)
    throw Error::parse(line_no, "expected " + std::to_string(k) +
                                    " lines, found " +
                                    std::to_string(a.lines.size()));
  return a;
}

mpq_class parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
      throw Error(Errc::invalid_parameter,
                  "malformed rational '" + text + "'");
    q.canonicalize();
    return q;
  }
  try {
    return parse_decimal(text, 0);
  } catch (const Error&) {
    throw Error(Errc::invalid_parameter, "malformed rational '" + text + "'");
  }
}

std::string write_arrangement(const LineArrangement& a) {
  std::string out = "lines " + std::to_string(a.lines.size()) + " precision " +
                    std::to_string(a.precision) + "\n";
  for (const Line& l : a.lines) {
    out += value_text(l.slope, a.precision);
    out += ' ';
    out += value_text(l.anchor, a.precision);
    out += '\n';
  }
  return out;
}

}  // namespace trigon
