#pragma once

#include <optional>
#include <vector>

namespace trigon {

enum class Setting { affine, projective };
enum class Kind { lines, pseudolines };

/// One table entry: what is known about the maximum number of triangles
/// for `n` lines or pseudolines in the given setting, next to the
/// closed-form upper bound. A record with `exact == false` and both
/// known values present describes a range "best found .. best bound".
struct BoundRecord {
  int n = 0;
  Setting setting = Setting::affine;
  Kind kind = Kind::pseudolines;
  long long formula_upper = 0;
  std::optional<long long> known_lower;
  std::optional<long long> known_upper;
  bool exact = false;
  /// The witness arrangement is realizable with straight lines.
  bool stretchable = false;
  /// The exact value is strictly below the closed-form bound.
  bool below_bound = false;
  /// The entry predates this work.
  bool previously_known = false;
};

/// Closed-form upper bound on the number of triangles among n curves.
///
/// affine odd: n(n-2)/3 rounded down; affine even: n(3n-7)/9 rounded
/// down; projective odd: n(n-2)/3 rounded down except the special value
/// 4 at n = 3; projective n = 2 (mod 6): n(n-1)/3 rounded down, minus
/// one; any other even projective n: n(n-1)/3.
///
/// Throws out_of_domain for n < 3 and on overflow.
long long formula_upper(int n, Setting setting);

/// The four records (two settings, lines and pseudolines) known for
/// 3 <= n <= 30. Throws no_data outside that window.
std::vector<BoundRecord> known_values(int n);

/// Infinite families with known triangle counts. A: n = 14*2^t + 1
/// affine lines, n(n-2)/3 triangles. B: n = 6*2^t + 1 affine lines,
/// (n(n-2)-2)/3. C: n = 18*2^t + 1 affine pseudolines, (n(n-2)-2)/3.
/// D: n = 2*2^t + 2 projective lines, n(n-1)/3.
enum class Family { A, B, C, D };

struct SequencePoint {
  long long n = 0;
  long long triangles = 0;

  bool operator==(const SequencePoint&) const = default;
};

/// Throws invalid_parameter for t < 0, out_of_domain on overflow.
SequencePoint sequence_value(Family family, int t);

/// A projective arrangement of n pseudolines reaches n(n-1)/3 triangles
/// exactly when an affine one of n-1 pseudolines reaches (n-1)(n-3)/3.
enum class RelationStatus { consistent, inconsistent, undetermined };

/// Checks the known pseudoline values at n and n-1 against that
/// equivalence. Requires n >= 4 (throws invalid_parameter below).
RelationStatus affine_projective_relation(int n);

}  // namespace trigon
