#include "trigon/bounds.hpp"

#include <array>

#include "trigon/errors.hpp"

namespace trigon {

namespace {

long long checked(__int128 v, const char* what) {
  if (v > static_cast<__int128>(9223372036854775807LL) || v < 0)
    throw Error(Errc::out_of_domain, std::string(what) + " overflows");
  return static_cast<long long>(v);
}

constexpr unsigned kBold = 1, kUnderline = 2, kGrey = 4;

struct RawRow {
  int n;
  // projective pseudolines: best found, best possible, flags
  long p_lo, p_hi;
  unsigned p_flags;
  // affine pseudolines
  long a_lo, a_hi;
  unsigned a_flags;
};

// Known values for 3 <= n <= 30. Equal lo/hi entries are settled;
// unequal ones are open ranges. Bold and underline flags describe the
// found arrangement; the grey flag follows the table's own marking,
// which for some open ranges sits on the bound end.
constexpr std::array<RawRow, 28> kTable{{
    {3, 4, 4, kBold | kGrey, 1, 1, kBold | kGrey},
    {4, 4, 4, kBold | kGrey, 2, 2, kBold | kGrey},
    {5, 5, 5, kBold | kGrey, 5, 5, kBold | kGrey},
    {6, 10, 10, kBold | kGrey, 7, 7, kBold},
    {7, 11, 11, kBold | kGrey, 11, 11, kBold | kGrey},
    {8, 16, 16, kBold | kUnderline | kGrey, 14, 14, kBold | kUnderline},
    {9, 21, 21, kBold | kGrey, 21, 21, kBold | kGrey},
    {10, 30, 30, kBold | kGrey, 25, 25, kBold},
    {11, 32, 33, kBold | kUnderline | kGrey, 32, 32, kBold | kUnderline},
    {12, 42, 42, kUnderline | kGrey, 37, 37, kBold | kUnderline},
    {13, 47, 47, kBold, 47, 47, kBold},
    {14, 58, 59, kBold | kUnderline | kGrey, 53, 53, kBold | kUnderline},
    {15, 65, 65, kBold | kGrey, 65, 65, kBold | kGrey},
    {16, 80, 80, kBold | kGrey, 72, 72, kBold},
    {17, 85, 85, kBold | kGrey, 85, 85, kBold | kGrey},
    {18, 102, 102, kBold | kGrey, 93, 94, kBold | kUnderline},
    {19, 107, 107, 0, 107, 107, 0},
    {20, 124, 125, kUnderline | kGrey, 116, 117, kUnderline},
    {21, 133, 133, kGrey, 133, 133, kGrey},
    {22, 154, 154, kGrey, 143, 144, kUnderline},
    {23, 161, 161, kGrey, 161, 161, kGrey},
    {24, 184, 184, kGrey, 172, 173, kUnderline},
    {25, 191, 191, kBold, 191, 191, kBold},
    {26, 214, 215, kBold | kUnderline | kGrey, 203, 205, kBold | kUnderline},
    {27, 225, 225, kGrey, 225, 225, kGrey},
    {28, 252, 252, kGrey, 238, 239, kUnderline},
    {29, 261, 261, kBold, 261, 261, kBold},
    {30, 290, 290, kBold, 275, 276, kBold | kUnderline},
}};

BoundRecord make_record(int n, Setting setting, Kind kind, long lo, long hi,
                        unsigned flags) {
  BoundRecord r;
  r.n = n;
  r.setting = setting;
  r.kind = kind;
  r.formula_upper = formula_upper(n, setting);
  r.stretchable = flags & kBold;
  r.below_bound = flags & kUnderline;
  r.previously_known = flags & kGrey;
  if (kind == Kind::pseudolines) {
    r.known_lower = lo;
    r.known_upper = hi;
    r.exact = lo == hi;
  } else {
    // A stretchable witness carries the lower bound over to lines; the
    // upper bound always does.
    r.known_upper = hi;
    if (r.stretchable) r.known_lower = lo;
    r.exact = r.stretchable && lo == hi;
  }
  return r;
}

// Tri-state per side of the equivalence: does the setting reach its
// perfect count at this n, according to the table?
enum class Reaches { yes, no, unknown };

Reaches reaches(long long perfect_num, int n, bool projective) {
  if (perfect_num % 3 != 0) return Reaches::no;
  const long long perfect = perfect_num / 3;
  if (n < 3 || n > 30) return Reaches::unknown;
  const RawRow& row = kTable[n - 3];
  const long lo = projective ? row.p_lo : row.a_lo;
  const long hi = projective ? row.p_hi : row.a_hi;
  if (hi < perfect) return Reaches::no;
  if (lo >= perfect) return Reaches::yes;
  return Reaches::unknown;
}

}  // namespace

long long formula_upper(int n, Setting setting) {
  if (n < 3) throw Error(Errc::out_of_domain, "need n >= 3");
  const __int128 nn = n;
  if (setting == Setting::affine) {
    if (n % 2 == 1) return checked(nn * (n - 2) / 3, "bound");
    return checked(nn * (3 * nn - 7) / 9, "bound");
  }
  if (n == 3) return 4;
  if (n % 2 == 1) return checked(nn * (n - 2) / 3, "bound");
  if (n % 6 == 2) return checked(nn * (n - 1) / 3 - 1, "bound");
  return checked(nn * (n - 1) / 3, "bound");
}

std::vector<BoundRecord> known_values(int n) {
  if (n < 3 || n > 30)
    throw Error(Errc::no_data,
                "no table data for n = " + std::to_string(n));
  const RawRow& row = kTable[n - 3];
  std::vector<BoundRecord> out;
  out.push_back(make_record(n, Setting::projective, Kind::pseudolines,
                            row.p_lo, row.p_hi, row.p_flags));
  out.push_back(make_record(n, Setting::projective, Kind::lines, row.p_lo,
                            row.p_hi, row.p_flags));
  out.push_back(make_record(n, Setting::affine, Kind::pseudolines, row.a_lo,
                            row.a_hi, row.a_flags));
  out.push_back(make_record(n, Setting::affine, Kind::lines, row.a_lo,
                            row.a_hi, row.a_flags));
  return out;
}

SequencePoint sequence_value(Family family, int t) {
  if (t < 0) throw Error(Errc::invalid_parameter, "t must be non-negative");
  if (t > 120) throw Error(Errc::out_of_domain, "sequence index overflows");
  const __int128 p = static_cast<__int128>(1) << t;
  __int128 n = 0, count = 0;
  switch (family) {
    case Family::A:
      n = 14 * p + 1;
      count = n * (n - 2) / 3;
      break;
    case Family::B:
      n = 6 * p + 1;
      count = (n * (n - 2) - 2) / 3;
      break;
    case Family::C:
      n = 18 * p + 1;
      count = (n * (n - 2) - 2) / 3;
      break;
    case Family::D:
      n = 2 * p + 2;
      count = n * (n - 1) / 3;
      break;
  }
  return SequencePoint{checked(n, "n"), checked(count, "count")};
}

RelationStatus affine_projective_relation(int n) {
  if (n < 4) throw Error(Errc::invalid_parameter, "need n >= 4");
  const Reaches proj =
      reaches(static_cast<long long>(n) * (n - 1), n, true);
  const Reaches aff = reaches(
      static_cast<long long>(n - 1) * (n - 3), n - 1, false);
  if (proj == Reaches::unknown || aff == Reaches::unknown)
    return RelationStatus::undetermined;
  return proj == aff ? RelationStatus::consistent
                     : RelationStatus::inconsistent;
}

}  // namespace trigon
