#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigon/errors.hpp"

namespace trigon {

// One vertical slice of a wiring diagram: the gap rows that carry a
// crossing at this x-position. Rows are 1-based (row i swaps the wires
// at positions i and i+1), strictly ascending, and no two are adjacent,
// so all crossings in a column are simultaneous.
struct Column {
  std::vector<int> rows;

  Column() = default;
  explicit Column(std::vector<int> r) : rows(std::move(r)) {}
  Column(std::initializer_list<int> r) : rows(r) {}

  bool operator==(const Column& other) const { return rows == other.rows; }
};

// Throws Errc::invalid_column unless rows are non-empty, ascending,
// pairwise non-adjacent and within 1..n-1.
void validate_column_shape(const Column& col, int n);

// Mutable companion state while a diagram is built or replayed: the
// wire occupying each position and the set of pairs that have crossed.
// Wires and positions are 1-based; wire i starts at position i.
class WireState {
 public:
  explicit WireState(int n);

  int n() const { return n_; }
  int wire_at(int position) const { return pos_to_wire_[position]; }
  int position_of(int wire) const { return wire_to_pos_[wire]; }
  bool crossed(int wire_a, int wire_b) const;
  long crossings_done() const { return crossings_; }
  bool all_crossed() const { return crossings_ == max_crossings(); }
  long max_crossings() const { return static_cast<long>(n_) * (n_ - 1) / 2; }

  // Applies all crossings of a validated column at once; throws
  // Errc::invalid_crossing when a pair would cross a second time.
  void apply_column(const Column& col);

  // Exact inverse of apply_column with the same column.
  void unapply_column(const Column& col);

 private:
  void set_crossed(int wire_a, int wire_b, bool value);

  int n_;
  std::vector<int> pos_to_wire_;
  std::vector<int> wire_to_pos_;
  std::vector<std::uint64_t> crossed_bits_;  // n rows of ceil(n/64) words
  std::size_t words_per_row_;
  long crossings_ = 0;
};

// An immutable sequence of validated columns over n wires. Extension
// goes through push_column, which returns a new value, so diagrams can
// be shared across threads freely.
class WiringDiagram {
 public:
  int n() const { return n_; }
  const std::vector<Column>& columns() const { return columns_; }
  long crossings() const { return crossings_; }

  bool operator==(const WiringDiagram& other) const {
    return n_ == other.n_ && columns_ == other.columns_;
  }

  // Validates every column in one replay pass.
  static WiringDiagram from_columns(int n, std::vector<Column> cols);

 private:
  friend WiringDiagram new_diagram(int n);
  friend WiringDiagram push_column(const WiringDiagram& d, Column col);

  explicit WiringDiagram(int n) : n_(n) {}

  int n_ = 0;
  std::vector<Column> columns_;
  long crossings_ = 0;
};

// Empty diagram on n >= 1 wires.
WiringDiagram new_diagram(int n);

// Copy of d with col appended; validates the column against the state
// after d's columns.
WiringDiagram push_column(const WiringDiagram& d, Column col);

// True when every pair of wires has crossed (n*(n-1)/2 crossings).
bool is_complete(const WiringDiagram& d);

// True when every crossing is pushed as far left as it can go: a cross
// at row i in column k >= 2 requires a cross at row i-1, i or i+1 in
// column k-1. Column 1 is unconstrained.
bool is_leftmost_canonical(const WiringDiagram& d);

// Replays all columns; useful for inspecting the final permutation.
WireState final_state(const WiringDiagram& d);

// Text format: optional '#' comment lines, then "n m", then m lines of
// ascending rows separated by single spaces. LF line ends.
WiringDiagram read_diagram(const std::string& text);
std::string write_diagram(const WiringDiagram& d);

}  // namespace trigon
