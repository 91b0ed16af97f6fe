#include "trigon/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trigon {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::invalid_column: return "invalid-column";
    case Errc::invalid_crossing: return "invalid-crossing";
    case Errc::parse_error: return "parse-error";
    case Errc::precondition_failed: return "precondition-failed";
    case Errc::precision_insufficient: return "precision-insufficient";
    case Errc::construction_failed: return "construction-failed";
    case Errc::invalid_arrangement: return "invalid-arrangement";
    case Errc::out_of_domain: return "out-of-domain";
    case Errc::no_data: return "no-data";
  }
  return "unknown";
}

void validate_column_shape(const Column& col, int n) {
  if (col.rows.empty())
    throw Error(Errc::invalid_column, "column has no crossings");
  int prev = -1;
  for (int r : col.rows) {
    if (r < 1 || r > n - 1)
      throw Error(Errc::invalid_column,
                  "row " + std::to_string(r) + " outside 1.." +
                      std::to_string(n - 1));
    if (prev >= 0 && r <= prev)
      throw Error(Errc::invalid_column, "rows not strictly ascending");
    if (prev >= 0 && r == prev + 1)
      throw Error(Errc::invalid_column,
                  "adjacent rows " + std::to_string(prev) + " and " +
                      std::to_string(r) + " in one column");
    prev = r;
  }
}

WireState::WireState(int n) : n_(n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "need at least one wire");
  pos_to_wire_.resize(n + 1);
  wire_to_pos_.resize(n + 1);
  std::iota(pos_to_wire_.begin(), pos_to_wire_.end(), 0);
  std::iota(wire_to_pos_.begin(), wire_to_pos_.end(), 0);
  words_per_row_ = static_cast<std::size_t>(n / 64 + 1);
  crossed_bits_.assign((n + 1) * words_per_row_, 0);
}

bool WireState::crossed(int wire_a, int wire_b) const {
  const std::uint64_t word =
      crossed_bits_[wire_a * words_per_row_ + wire_b / 64];
  return (word >> (wire_b % 64)) & 1u;
}

void WireState::set_crossed(int wire_a, int wire_b, bool value) {
  auto flip = [&](int a, int b) {
    std::uint64_t& word = crossed_bits_[a * words_per_row_ + b / 64];
    const std::uint64_t mask = std::uint64_t{1} << (b % 64);
    if (value)
      word |= mask;
    else
      word &= ~mask;
  };
  flip(wire_a, wire_b);
  flip(wire_b, wire_a);
}

void WireState::apply_column(const Column& col) {
  for (int r : col.rows) {
    const int u = pos_to_wire_[r];
    const int v = pos_to_wire_[r + 1];
    if (crossed(u, v))
      throw Error(Errc::invalid_crossing,
                  "wires " + std::to_string(u) + " and " + std::to_string(v) +
                      " cross twice (row " + std::to_string(r) + ")");
  }
  // Swaps in one column touch disjoint position pairs, so order is free.
  for (int r : col.rows) {
    const int u = pos_to_wire_[r];
    const int v = pos_to_wire_[r + 1];
    set_crossed(u, v, true);
    pos_to_wire_[r] = v;
    pos_to_wire_[r + 1] = u;
    wire_to_pos_[u] = r + 1;
    wire_to_pos_[v] = r;
    ++crossings_;
  }
}

void WireState::unapply_column(const Column& col) {
  for (int r : col.rows) {
    const int u = pos_to_wire_[r];
    const int v = pos_to_wire_[r + 1];
    set_crossed(u, v, false);
    pos_to_wire_[r] = v;
    pos_to_wire_[r + 1] = u;
    wire_to_pos_[u] = r + 1;
    wire_to_pos_[v] = r;
    --crossings_;
  }
}

WiringDiagram WiringDiagram::from_columns(int n, std::vector<Column> cols) {
  WiringDiagram d = new_diagram(n);
  WireState state(n);
  for (auto& col : cols) {
    validate_column_shape(col, n);
    state.apply_column(col);
    d.crossings_ += static_cast<long>(col.rows.size());
  }
  d.columns_ = std::move(cols);
  return d;
}

WiringDiagram new_diagram(int n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "need at least one wire");
  return WiringDiagram(n);
}

WiringDiagram push_column(const WiringDiagram& d, Column col) {
  validate_column_shape(col, d.n());
  WireState state(d.n());
  for (const Column& c : d.columns()) state.apply_column(c);
  state.apply_column(col);
  WiringDiagram out = d;
  out.crossings_ += static_cast<long>(col.rows.size());
  out.columns_.push_back(std::move(col));
  return out;
}

bool is_complete(const WiringDiagram& d) {
  return d.crossings() == static_cast<long>(d.n()) * (d.n() - 1) / 2;
}

bool is_leftmost_canonical(const WiringDiagram& d) {
  const auto& cols = d.columns();
  for (std::size_t k = 1; k < cols.size(); ++k) {
    for (int r : cols[k].rows) {
      bool blocked = false;
      for (int p : cols[k - 1].rows) {
        if (p >= r - 1 && p <= r + 1) {
          blocked = true;
          break;
        }
      }
      if (!blocked) return false;
    }
  }
  return true;
}

WireState final_state(const WiringDiagram& d) {
  WireState state(d.n());
  for (const Column& c : d.columns()) state.apply_column(c);
  return state;
}

namespace {

// Splits text into lines; accepts a final line without trailing LF.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool parse_int_fields(const std::string& line, std::vector<long>& out) {
  out.clear();
  std::istringstream in(line);
  long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) return false;
  return !out.empty();
}

}  // namespace

WiringDiagram read_diagram(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() &&
         (lines[i].empty() || lines[i][0] == '#'))
    ++i;
  if (i >= lines.size()) throw Error::parse(1, "missing header");

  const int header_line = static_cast<int>(i) + 1;
  std::vector<long> header;
  if (!parse_int_fields(lines[i], header) || header.size() != 2)
    throw Error::parse(header_line, "header must be \"n m\"");
  const long n = header[0];
  const long m = header[1];
  if (n < 1) throw Error::parse(header_line, "need at least one wire");
  if (m < 0) throw Error::parse(header_line, "negative column count");
  ++i;

  std::vector<Column> cols;
  WireState state(static_cast<int>(n));
  for (long c = 0; c < m; ++c, ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (i >= lines.size()) throw Error::parse(line_no, "missing column line");
    std::vector<long> rows;
    if (!parse_int_fields(lines[i], rows))
      throw Error::parse(line_no, "expected row numbers");
    Column col;
    col.rows.assign(rows.begin(), rows.end());
    try {
      validate_column_shape(col, static_cast<int>(n));
      state.apply_column(col);
    } catch (const Error& e) {
      throw Error::parse(line_no, e.what());
    }
    cols.push_back(std::move(col));
  }
  for (; i < lines.size(); ++i) {
    if (!lines[i].empty())
      throw Error::parse(static_cast<int>(i) + 1,
                         "unexpected content after last column");
  }
  return WiringDiagram::from_columns(static_cast<int>(n), std::move(cols));
}

std::string write_diagram(const WiringDiagram& d) {
  std::string out = std::to_string(d.n()) + " " +
                    std::to_string(d.columns().size()) + "\n";
  for (const Column& col : d.columns()) {
    for (std::size_t j = 0; j < col.rows.size(); ++j) {
      if (j) out.push_back(' ');
      out += std::to_string(col.rows[j]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace trigon
