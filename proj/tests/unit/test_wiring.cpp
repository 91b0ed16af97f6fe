#include <functional>
#include <string>

#include "doctest.h"
#include "trigon/errors.hpp"
#include "trigon/wiring.hpp"

using namespace trigon;

namespace {

bool throws_code(Errc want, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("column shape validation") {
  CHECK_NOTHROW(validate_column_shape(Column{1, 3}, 4));
  CHECK_NOTHROW(validate_column_shape(Column{2}, 3));
  CHECK(throws_code(Errc::invalid_column,
                    [] { validate_column_shape(Column{}, 4); }));
  CHECK(throws_code(Errc::invalid_column,
                    [] { validate_column_shape(Column{1, 2}, 4); }));
  CHECK(throws_code(Errc::invalid_column,
                    [] { validate_column_shape(Column{3, 1}, 4); }));
  CHECK(throws_code(Errc::invalid_column,
                    [] { validate_column_shape(Column{0}, 4); }));
  CHECK(throws_code(Errc::invalid_column,
                    [] { validate_column_shape(Column{4}, 4); }));
  CHECK(throws_code(Errc::invalid_column,
                    [] { validate_column_shape(Column{2, 2}, 5); }));
}

TEST_CASE("pair may cross only once") {
  WiringDiagram d = new_diagram(3);
  d = push_column(d, Column{1});
  d = push_column(d, Column{2});
  // Wires 2 and 3 sit at positions 1 and 2 now and crossed already.
  CHECK(throws_code(Errc::invalid_crossing,
                    [&] { push_column(d, Column{2}); }));
  d = push_column(d, Column{1});
  CHECK(is_complete(d));
  CHECK(throws_code(Errc::invalid_crossing,
                    [&] { push_column(d, Column{1}); }));
}

TEST_CASE("final state of a complete diagram is the reversal") {
  WiringDiagram e = new_diagram(4);
  e = push_column(e, Column{1, 3});
  e = push_column(e, Column{2});
  e = push_column(e, Column{1, 3});
  e = push_column(e, Column{2});
  CHECK(is_complete(e));
  const WireState st = final_state(e);
  for (int r = 1; r <= 4; ++r) CHECK(st.wire_at(r) == 5 - r);
}

TEST_CASE("leftmost canonical predicate") {
  // First column is always free.
  WiringDiagram a = new_diagram(5);
  a = push_column(a, Column{2, 4});
  CHECK(is_leftmost_canonical(a));
  // A later cross must touch the previous column's rows within one.
  a = push_column(a, Column{3});
  CHECK(is_leftmost_canonical(a));
  WiringDiagram b = new_diagram(5);
  b = push_column(b, Column{1});
  b = push_column(b, Column{3});  // could have joined column 1
  CHECK_FALSE(is_leftmost_canonical(b));
  WiringDiagram c = new_diagram(5);
  c = push_column(c, Column{1});
  c = push_column(c, Column{2});
  CHECK(is_leftmost_canonical(c));
}

TEST_CASE("diagram text round trip") {
  const std::string text = "# witness\n3 3\n1\n2\n1\n";
  const WiringDiagram d = read_diagram(text);
  CHECK(d.n() == 3);
  CHECK(d.columns().size() == 3);
  CHECK(is_complete(d));
  // Comments are not preserved; the payload is.
  CHECK(write_diagram(d) == "3 3\n1\n2\n1\n");
  CHECK(read_diagram(write_diagram(d)) == d);
}

TEST_CASE("diagram parse errors carry line numbers") {
  try {
    read_diagram("3 2\n1\nbogus\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    read_diagram("# only a comment\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  // Column count must match the header.
  CHECK_THROWS_AS(read_diagram("3 4\n1\n2\n1\n"), Error);
  // Adjacent rows in one column are re-checked on read.
  try {
    read_diagram("4 1\n1 2\n");
    FAIL("expected a column error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("from_columns validates the whole prefix") {
  CHECK_NOTHROW(WiringDiagram::from_columns(3, {Column{1}, Column{2}}));
  CHECK_THROWS_AS(WiringDiagram::from_columns(3, {Column{1}, Column{1}}),
                  Error);
  CHECK_THROWS_AS(WiringDiagram::from_columns(0, {}), Error);
}
