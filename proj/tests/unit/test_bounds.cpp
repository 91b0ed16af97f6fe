#include <vector>

#include "doctest.h"
#include "trigon/bounds.hpp"
#include "trigon/errors.hpp"

using namespace trigon;

namespace {

const BoundRecord& pick(const std::vector<BoundRecord>& rs, Setting s,
                        Kind k) {
  for (const BoundRecord& r : rs)
    if (r.setting == s && r.kind == k) return r;
  throw std::logic_error("record missing");
}

}  // namespace

TEST_CASE("closed form ceilings") {
  CHECK(formula_upper(8, Setting::affine) == 15);
  CHECK(formula_upper(18, Setting::affine) == 94);
  CHECK(formula_upper(9, Setting::affine) == 21);
  CHECK(formula_upper(15, Setting::affine) == 65);
  CHECK(formula_upper(14, Setting::projective) == 59);
  CHECK(formula_upper(11, Setting::projective) == 33);
  CHECK(formula_upper(3, Setting::projective) == 4);
  CHECK(formula_upper(3, Setting::affine) == 1);
  CHECK(formula_upper(12, Setting::projective) == 44);
  CHECK(formula_upper(26, Setting::projective) == 215);
  CHECK(formula_upper(19, Setting::affine) == 107);
  auto rejects = [](int n, Setting s) {
    try {
      formula_upper(n, s);
    } catch (const Error& e) {
      return e.code() == Errc::out_of_domain;
    }
    return false;
  };
  CHECK(rejects(2, Setting::affine));
  CHECK(rejects(1, Setting::projective));
}

TEST_CASE("table lookups match the published values") {
  const auto r12 = known_values(12);
  REQUIRE(r12.size() == 4);
  const BoundRecord& a12 = pick(r12, Setting::affine, Kind::pseudolines);
  CHECK(a12.exact);
  CHECK(*a12.known_lower == 37);
  CHECK(*a12.known_upper == 37);
  CHECK(a12.stretchable);
  CHECK(a12.below_bound);

  const BoundRecord& a26 =
      pick(known_values(26), Setting::affine, Kind::pseudolines);
  CHECK_FALSE(a26.exact);
  CHECK(*a26.known_lower == 203);
  CHECK(*a26.known_upper == 205);

  const BoundRecord& a19 =
      pick(known_values(19), Setting::affine, Kind::pseudolines);
  CHECK(a19.exact);
  CHECK(*a19.known_lower == 107);
  CHECK_FALSE(a19.stretchable);

  const BoundRecord& p14 =
      pick(known_values(14), Setting::projective, Kind::pseudolines);
  CHECK(*p14.known_lower == 58);
  CHECK(*p14.known_upper == 59);
  CHECK(p14.previously_known);
  CHECK_FALSE(p14.exact);
}

TEST_CASE("line records only inherit stretchable lower bounds") {
  // n = 19's affine witness is not known to be stretchable, so the
  // lines row keeps the upper bound but drops the lower one.
  const BoundRecord& l19 =
      pick(known_values(19), Setting::affine, Kind::lines);
  CHECK_FALSE(l19.known_lower.has_value());
  CHECK(*l19.known_upper == 107);
  CHECK_FALSE(l19.exact);
  // n = 15's witness is a straight-line arrangement, so lines match.
  const BoundRecord& l15 =
      pick(known_values(15), Setting::affine, Kind::lines);
  CHECK(l15.exact);
  CHECK(*l15.known_lower == 65);
}

TEST_CASE("table bounds never exceed the formula") {
  for (int n = 3; n <= 30; ++n) {
    for (const BoundRecord& r : known_values(n)) {
      CHECK(r.formula_upper == formula_upper(n, r.setting));
      if (r.known_lower) CHECK(*r.known_lower <= *r.known_upper);
      if (r.known_upper) CHECK(*r.known_upper <= r.formula_upper);
    }
    const auto rs = known_values(n);
    const BoundRecord& ap = pick(rs, Setting::affine, Kind::pseudolines);
    const BoundRecord& pp = pick(rs, Setting::projective, Kind::pseudolines);
    CHECK(*ap.known_upper <= *pp.known_upper);
    const BoundRecord& al = pick(rs, Setting::affine, Kind::lines);
    CHECK(*al.known_upper <= *ap.known_upper);
    if (al.known_lower) CHECK(*al.known_lower == *ap.known_lower);
  }
}

TEST_CASE("no table data outside the published range") {
  auto rejects = [](int n) {
    try {
      known_values(n);
    } catch (const Error& e) {
      return e.code() == Errc::no_data;
    }
    return false;
  };
  CHECK(rejects(2));
  CHECK(rejects(31));
  CHECK(rejects(0));
}

TEST_CASE("construction families") {
  CHECK(sequence_value(Family::A, 0) == SequencePoint{15, 65});
  CHECK(sequence_value(Family::A, 1) == SequencePoint{29, 261});
  CHECK(sequence_value(Family::B, 0) == SequencePoint{7, 11});
  CHECK(sequence_value(Family::B, 1) == SequencePoint{13, 47});
  CHECK(sequence_value(Family::B, 2) == SequencePoint{25, 191});
  CHECK(sequence_value(Family::C, 0) == SequencePoint{19, 107});
  CHECK(sequence_value(Family::D, 0) == SequencePoint{4, 4});
  CHECK(sequence_value(Family::D, 1) == SequencePoint{6, 10});
  CHECK(sequence_value(Family::D, 2) == SequencePoint{10, 30});
  CHECK(sequence_value(Family::D, 3) == SequencePoint{18, 102});
}

TEST_CASE("family values meet their ceilings") {
  for (int t = 0; t <= 4; ++t) {
    const SequencePoint a = sequence_value(Family::A, t);
    CHECK(a.triangles ==
          formula_upper(static_cast<int>(a.n), Setting::affine));
    const SequencePoint b = sequence_value(Family::B, t);
    CHECK(b.triangles ==
          formula_upper(static_cast<int>(b.n), Setting::affine));
    const SequencePoint c = sequence_value(Family::C, t);
    CHECK(c.triangles ==
          formula_upper(static_cast<int>(c.n), Setting::affine));
    const SequencePoint d = sequence_value(Family::D, t);
    CHECK(d.triangles ==
          formula_upper(static_cast<int>(d.n), Setting::projective));
  }
}

TEST_CASE("sequence domain limits") {
  auto code_of = [](Family f, int t) {
    try {
      sequence_value(f, t);
      return Errc::no_data;  // placeholder for "did not throw"
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code_of(Family::A, -1) == Errc::invalid_parameter);
  CHECK(code_of(Family::A, 60) == Errc::out_of_domain);
  CHECK(code_of(Family::B, 121) == Errc::out_of_domain);
  CHECK(code_of(Family::B, 20) == Errc::no_data);  // fits comfortably
}

TEST_CASE("projective affine equivalence against the table") {
  CHECK(affine_projective_relation(16) == RelationStatus::consistent);
  CHECK(affine_projective_relation(12) == RelationStatus::consistent);
  CHECK(affine_projective_relation(4) == RelationStatus::consistent);
  CHECK(affine_projective_relation(10) == RelationStatus::consistent);
  CHECK(affine_projective_relation(22) == RelationStatus::consistent);
  CHECK(affine_projective_relation(28) == RelationStatus::consistent);
  // The published data never contradicts the equivalence.
  for (int n = 4; n <= 30; ++n)
    CHECK(affine_projective_relation(n) == RelationStatus::consistent);
  // Beyond the table the divisible cases cannot be decided.
  CHECK(affine_projective_relation(31) == RelationStatus::undetermined);
  // When neither side can be perfect for parity reasons the relation
  // holds vacuously even without data.
  CHECK(affine_projective_relation(32) == RelationStatus::consistent);
  CHECK_THROWS_AS(affine_projective_relation(3), Error);
}
