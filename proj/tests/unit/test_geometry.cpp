#include <gmpxx.h>

#include <string>
#include <vector>

#include "doctest.h"
#include "trigon/errors.hpp"
#include "trigon/faces.hpp"
#include "trigon/geometry.hpp"
#include "trigon/real.hpp"
#include "trigon/wiring.hpp"

using namespace trigon;

namespace {

Line line(long slope_num, long slope_den, long anchor_num, long anchor_den) {
  return Line{Real::rational(mpq_class(slope_num, slope_den)),
              Real::rational(mpq_class(anchor_num, anchor_den))};
}

}  // namespace

TEST_CASE("hexagonal seed arrangement") {
  const LineArrangement a = hexagonal7();
  REQUIRE(a.lines.size() == 7);
  CHECK(a.precision >= 256);
  CHECK(horizontal_index(a) == 2);
  CHECK(crossings(a).size() == 21);
  const std::vector<int> wires = wire_of_line(a);
  // Ascending slope order: -7 -3 -1 0 1 3 7.
  CHECK(wires == std::vector<int>{6, 5, 4, 3, 2, 1, 7});
  const WiringDiagram d = to_wiring(a);
  CHECK(d.n() == 7);
  CHECK(is_complete(d));
  CHECK(count_triangles(d).triangle_count == 11);
}

TEST_CASE("seed builders reject a non-positive offset") {
  auto rejects = [](const mpq_class& eps) {
    try {
      hexagonal7(eps);
    } catch (const Error& e) {
      return e.code() == Errc::invalid_parameter;
    }
    return false;
  };
  CHECK(rejects(mpq_class(0)));
  CHECK(rejects(mpq_class(-1, 10)));
  CHECK_THROWS_AS(simmons15(mpq_class(0)), Error);
}

TEST_CASE("three lines map to the one-triangle diagram") {
  LineArrangement a;
  a.lines.push_back(line(1, 1, 0, 1));    // y = x
  a.lines.push_back(line(-1, 1, 1, 1));   // y = 1 - x
  a.lines.push_back(line(0, 1, 0, 1));    // the axis
  const WiringDiagram d = to_wiring(a);
  const WiringDiagram want =
      WiringDiagram::from_columns(3, {Column{2}, Column{1}, Column{2}});
  CHECK(d == want);
  CHECK(count_triangles(d).triangle_count == 1);
}

TEST_CASE("parallel lines are a structural error") {
  LineArrangement a;
  a.lines.push_back(line(1, 1, 0, 1));
  a.lines.push_back(line(1, 1, 1, 1));
  a.lines.push_back(line(0, 1, 0, 1));
  try {
    to_wiring(a);
    FAIL("expected an arrangement error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_arrangement);
  }
}

TEST_CASE("equal slopes written differently exhaust precision") {
  // tan(pi/4) and 1 denote the same slope but differ structurally, so
  // no finite precision can separate them and the failure is honest.
  LineArrangement a;
  a.lines.push_back(Line{Real::tan_pi(mpq_class(1, 4)),
                         Real::rational(mpq_class(0))});
  a.lines.push_back(line(1, 1, 1, 1));
  try {
    to_wiring(a);
    FAIL("expected a precision error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precision_insufficient);
  }
}

TEST_CASE("arrangement text round trip") {
  const LineArrangement a = hexagonal7();
  const std::string text = write_arrangement(a);
  const LineArrangement b = read_arrangement(text);
  REQUIRE(b.lines.size() == a.lines.size());
  CHECK(b.precision == a.precision);
  // The seed serializes exactly: integer slopes, tangent literals and
  // a decimal offset, so the reread arrangement is the same one.
  CHECK(write_arrangement(b) == text);
  CHECK(to_wiring(b) == to_wiring(a));
}

TEST_CASE("arrangement parse errors carry line numbers") {
  auto code_line = [](const std::string& text, Errc want, int line) {
    try {
      read_arrangement(text);
      return false;
    } catch (const Error& e) {
      return e.code() == want && e.line() == line;
    }
  };
  CHECK(code_line("bogus\n", Errc::parse_error, 1));
  CHECK(code_line("lines 2 precision 8\n", Errc::parse_error, 1));
  CHECK(code_line("lines 1 precision 256 extra\n", Errc::parse_error, 1));
  CHECK(code_line("lines 1 precision 256\n1 2 3\n", Errc::parse_error, 2));
  CHECK(code_line("lines 1 precision 256\nnope 0\n", Errc::parse_error, 2));
  CHECK(code_line("lines 2 precision 256\n1 0\n", Errc::parse_error, 2));
  CHECK(code_line("lines 1 precision 256\ntan(1/2*pi) 0\n", Errc::parse_error,
                  2));
  // Comments and blank lines do not count as content but keep their
  // line numbers.
  CHECK(code_line("# note\n\nlines 1 precision 256\n0.5.5 0\n",
                  Errc::parse_error, 4));
}

TEST_CASE("rational parsing for command line values") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("-2/8") == mpq_class(-1, 4));
  CHECK(parse_rational("0.125") == mpq_class(1, 8));
  // Leading zeros must not trigger octal digit parsing.
  CHECK(parse_rational("0.8") == mpq_class(4, 5));
  CHECK(parse_rational("0.0625") == mpq_class(1, 16));
  CHECK(parse_rational("-1") == mpq_class(-1));
  CHECK(parse_rational("2.5e-3") == mpq_class(1, 400));
  auto rejects = [](const std::string& s) {
    try {
      parse_rational(s);
    } catch (const Error& e) {
      return e.code() == Errc::invalid_parameter;
    }
    return false;
  };
  CHECK(rejects("abc"));
  CHECK(rejects("1/0"));
  CHECK(rejects("1//2"));
  CHECK(rejects(""));
}

TEST_CASE("duplication doubles the even line count") {
  const LineArrangement a = hexagonal7();
  const LineArrangement b = duplicate(a);
  REQUIRE(b.lines.size() == 13);
  CHECK(horizontal_index(b) >= 0);
  const WiringDiagram d = to_wiring(b);
  CHECK(d.n() == 13);
  CHECK(count_triangles(d).triangle_count == 47);
}

TEST_CASE("duplication needs a unique horizontal line") {
  LineArrangement a;
  a.lines.push_back(line(1, 1, 0, 1));
  a.lines.push_back(line(-1, 1, 1, 1));
  a.lines.push_back(line(2, 1, 3, 1));
  try {
    duplicate(a);  // no horizontal at all
    FAIL("expected a precondition failure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_failed);
  }
}

TEST_CASE("iterated duplication follows the doubling schedule") {
  const LineArrangement t0 = iterate_duplication(Seed::hexagonal7, 0);
  CHECK(t0.lines.size() == 7);
  const LineArrangement t1 = iterate_duplication(Seed::hexagonal7, 1);
  CHECK(t1.lines.size() == 13);
  CHECK_THROWS_AS(iterate_duplication(Seed::hexagonal7, -1), Error);
}
