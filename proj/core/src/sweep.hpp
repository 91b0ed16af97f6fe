#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trigon/faces.hpp"
#include "trigon/wiring.hpp"

namespace trigon::detail {

// Incremental left-to-right face sweep over a wiring diagram with
// per-column undo, shared by the counting and search code paths.
//
// Per gap there is always one open face. A crossing at row r closes
// the open face in gap r (a triangle iff it was opened by a crossing
// and carries exactly one intermediate boundary vertex), opens a fresh
// face there, and adds an intermediate vertex to the open faces in
// gaps r-1 and r+1.
//
// A face is dead once it can no longer close as a triangle: it never
// opened, it accumulated two intermediate vertices, it closed as a
// non-triangle, or it sits next to a closing triangle vertex (the
// shared wire segment would otherwise belong to two triangles, which
// forces a pair to cross twice). A bounded segment is provably unused
// as soon as both incident faces are dead.
class Sweep {
 public:
  Sweep(int n, bool record_details) : n_(n), details_(record_details) {
    if (n < 1)
      throw Error(Errc::invalid_parameter, "need at least one wire");
    pos_to_wire_.resize(n + 1);
    wire_to_pos_.resize(n + 1);
    for (int i = 0; i <= n; ++i) pos_to_wire_[i] = wire_to_pos_[i] = i;
    words_per_row_ = static_cast<std::size_t>(n / 64 + 1);
    crossed_bits_.assign((n + 1) * words_per_row_, 0);
    cross_count_.assign(n + 1, 0);
    wire_contact_.assign(n + 1, 0);
    open_face_.assign(n + 1, -1);
    // Initial faces are unbounded to the left and start out dead.
    for (int g = 1; g <= n - 1; ++g) {
      open_face_[g] = static_cast<std::int32_t>(faces_.size());
      Face f;
      f.dead = true;
      faces_.push_back(f);
    }
  }

  int n() const { return n_; }
  int wire_at(int position) const { return pos_to_wire_[position]; }
  int position_of(int wire) const { return wire_to_pos_[wire]; }
  long crossings_done() const { return crossings_; }
  bool all_crossed() const {
    return crossings_ == static_cast<long>(n_) * (n_ - 1) / 2;
  }
  int columns_pushed() const { return depth_; }
  long long closed_triangles() const { return triangle_count_; }
  long long provably_unused() const { return provably_unused_; }

  bool crossed(int wire_a, int wire_b) const {
    const std::uint64_t word =
        crossed_bits_[wire_a * words_per_row_ + wire_b / 64];
    return (word >> (wire_b % 64)) & 1u;
  }

  // Column must be shape-valid; re-crossing throws Errc::invalid_crossing
  // before any state changes.
  void push(const Column& col) {
    for (int r : col.rows) {
      if (crossed(pos_to_wire_[r], pos_to_wire_[r + 1]))
        throw Error(Errc::invalid_crossing,
                    "wires " + std::to_string(pos_to_wire_[r]) + " and " +
                        std::to_string(pos_to_wire_[r + 1]) +
                        " cross twice (row " + std::to_string(r) + ")");
    }
    if (static_cast<std::size_t>(depth_) >= frames_.size())
      frames_.emplace_back();
    Frame& frame = frames_[depth_];
    frame.faces_size = faces_.size();
    frame.pieces_size = pieces_.size();
    frame.used_size = used_.size();
    frame.triangles_size = triangles_.size();
    frame.triangle_count = triangle_count_;
    frame.provably_unused = provably_unused_;
    frame.open_saved.clear();
    frame.face_saved.clear();
    ++depth_;
    const int column_index = depth_;  // columns are 1-based
    for (int r : col.rows) process_cross(frame, column_index, r);
  }

  // Undo of the most recent push; col must be that same column.
  void pop(const Column& col) {
    assert(depth_ > 0);
    Frame& frame = frames_[depth_ - 1];
    for (auto it = frame.face_saved.rbegin(); it != frame.face_saved.rend();
         ++it)
      faces_[it->first] = it->second;
    for (auto it = frame.open_saved.rbegin(); it != frame.open_saved.rend();
         ++it)
      open_face_[it->first] = it->second;
    faces_.resize(frame.faces_size);
    pieces_.resize(frame.pieces_size);
    for (std::size_t i = frame.used_size; i < used_.size(); ++i)
      --wire_contact_[used_[i].wire];
    used_.resize(frame.used_size);
    triangles_.resize(frame.triangles_size);
    triangle_count_ = frame.triangle_count;
    provably_unused_ = frame.provably_unused;
    for (int r : col.rows) {
      const int u = pos_to_wire_[r];
      const int v = pos_to_wire_[r + 1];
      set_crossed(u, v, false);
      pos_to_wire_[r] = v;
      pos_to_wire_[r + 1] = u;
      wire_to_pos_[u] = r + 1;
      wire_to_pos_[v] = r;
      --cross_count_[u];
      --cross_count_[v];
      --crossings_;
    }
    --depth_;
  }

  // Marks the still-open faces of a fully crossed diagram dead: nothing
  // can close them anymore. Irreversible; only for one-shot use.
  void finalize_complete() {
    assert(all_crossed());
    for (int g = 1; g <= n_ - 1; ++g) kill(nullptr, open_face_[g]);
  }

  // Details below are populated only with record_details.
  const std::vector<TriangleAt>& triangles() const { return triangles_; }
  const std::vector<SegmentId>& used_segments() const { return used_; }
  const std::vector<int>& wire_contact() const { return wire_contact_; }

  std::vector<SegmentId> dead_segments() const {
    std::vector<SegmentId> out;
    for (const Piece& p : pieces_) {
      if (slot_dead(p.above) && slot_dead(p.below))
        out.push_back({p.wire, p.index});
    }
    return out;
  }

 private:
  static constexpr std::int32_t kBorder = -1;  // always-dead sentinel slot

  struct Face {
    std::int32_t opening_col = 0;  // 0 while unopened (left-unbounded)
    std::int32_t upper_piece = -1;
    std::int32_t lower_piece = -1;
    std::int32_t mid_piece = -1;
    std::int32_t adj_head = -1;
    std::uint8_t mids = 0;  // saturates at 2
    bool mid_below = false;
    bool doomed = false;
    bool dead = false;
    bool closed = false;
  };

  struct Piece {
    std::int32_t wire;
    std::int32_t index;
    std::int32_t above;  // face id or kBorder
    std::int32_t below;
    std::int32_t next_above = -1;  // adjacency chain per slot
    std::int32_t next_below = -1;
  };

  struct Frame {
    std::size_t faces_size = 0;
    std::size_t pieces_size = 0;
    std::size_t used_size = 0;
    std::size_t triangles_size = 0;
    long long triangle_count = 0;
    long long provably_unused = 0;
    std::vector<std::pair<int, std::int32_t>> open_saved;
    std::vector<std::pair<std::int32_t, Face>> face_saved;
  };

  void set_crossed(int wire_a, int wire_b, bool value) {
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

  bool slot_dead(std::int32_t slot) const {
    return slot == kBorder || faces_[slot].dead;
  }

  // Snapshots only faces that predate the current column; younger ones
  // vanish on pop via pool truncation. Duplicate snapshots are fine
  // because pop restores in reverse order.
  void save_face(Frame* frame, std::int32_t fid) {
    if (frame && static_cast<std::size_t>(fid) < frame->faces_size)
      frame->face_saved.emplace_back(fid, faces_[fid]);
  }

  // Death transition: a newly dead face sweeps its adjacency chain and
  // counts every piece whose other side is already dead. Each piece is
  // counted exactly once because it joins the chain of every live
  // incident face and deaths are one-way.
  void kill(Frame* frame, std::int32_t fid) {
    if (faces_[fid].dead) return;
    save_face(frame, fid);
    faces_[fid].dead = true;
    std::int32_t pid = faces_[fid].adj_head;
    while (pid != -1) {
      const Piece& p = pieces_[pid];
      if (p.above == fid) {
        if (slot_dead(p.below)) ++provably_unused_;
        pid = p.next_above;
      } else {
        assert(p.below == fid);
        if (slot_dead(p.above)) ++provably_unused_;
        pid = p.next_below;
      }
    }
  }

  // Creates the piece that starts at the current crossing for wire w,
  // linking it to the faces above and below. Returns -1 when the piece
  // cannot be a bounded segment.
  std::int32_t new_piece(Frame& frame, int w, std::int32_t above,
                         std::int32_t below) {
    const int index = cross_count_[w];
    if (index < 1 || index > n_ - 2) return -1;
    const auto pid = static_cast<std::int32_t>(pieces_.size());
    Piece p;
    p.wire = w;
    p.index = index;
    p.above = above;
    p.below = below;
    if (above != kBorder && !faces_[above].dead) {
      save_face(&frame, above);
      p.next_above = faces_[above].adj_head;
      faces_[above].adj_head = pid;
    }
    if (below != kBorder && !faces_[below].dead) {
      save_face(&frame, below);
      p.next_below = faces_[below].adj_head;
      faces_[below].adj_head = pid;
    }
    pieces_.push_back(p);
    return pid;
  }

  void add_mid(Frame& frame, std::int32_t fid, bool below,
               std::int32_t piece) {
    save_face(&frame, fid);
    Face& f = faces_[fid];
    if (f.mids == 0) {
      f.mids = 1;
      f.mid_below = below;
      f.mid_piece = piece;
    } else if (f.mids == 1) {
      f.mids = 2;
      kill(&frame, fid);
    }
  }

  void doom(Frame& frame, std::int32_t fid) {
    save_face(&frame, fid);
    faces_[fid].doomed = true;
    kill(&frame, fid);
  }

  void process_cross(Frame& frame, int column_index, int r) {
    const int u = pos_to_wire_[r];      // moves down to position r+1
    const int v = pos_to_wire_[r + 1];  // moves up to position r

    // Close the open face in gap r. Copy it out: the pool may grow.
    const std::int32_t closing = open_face_[r];
    save_face(&frame, closing);
    faces_[closing].closed = true;
    const Face closed_face = faces_[closing];
    const bool is_triangle = closed_face.opening_col > 0 &&
                             closed_face.mids == 1 && !closed_face.dead;
    // A live opened face cannot close without a boundary vertex: that
    // would be the same pair crossing twice, rejected in push.
    assert(closed_face.dead || closed_face.mids == 1);
    assert(!(is_triangle && closed_face.doomed));

    // Fresh face in gap r.
    const auto opened = static_cast<std::int32_t>(faces_.size());
    frame.open_saved.emplace_back(r, closing);
    {
      Face nf;
      nf.opening_col = column_index;
      faces_.push_back(nf);
      open_face_[r] = opened;
    }

    // New pieces for both wires; each has the fresh face on one side,
    // so no piece can start with both sides dead.
    ++cross_count_[u];
    ++cross_count_[v];
    const std::int32_t below_slot =
        (r + 1 <= n_ - 1) ? open_face_[r + 1] : kBorder;
    const std::int32_t above_slot = (r - 1 >= 1) ? open_face_[r - 1] : kBorder;
    const std::int32_t piece_u = new_piece(frame, u, opened, below_slot);
    const std::int32_t piece_v = new_piece(frame, v, above_slot, opened);
    faces_[opened].upper_piece = piece_v;
    faces_[opened].lower_piece = piece_u;

    if (is_triangle) {
      ++triangle_count_;
      if (details_) record_triangle(closed_face, r);
      // Each neighbouring open face shares a boundary segment with the
      // closing triangle, so it can never become a triangle itself.
      if (r - 1 >= 1) doom(frame, open_face_[r - 1]);
      if (r + 1 <= n_ - 1) doom(frame, open_face_[r + 1]);
    }

    // The crossing is an intermediate boundary vertex for both
    // neighbouring gaps. Their boundary wire changes here, so the new
    // piece on the respective side is the candidate triangle side.
    if (r - 1 >= 1) add_mid(frame, open_face_[r - 1], true, piece_v);
    if (r + 1 <= n_ - 1) add_mid(frame, open_face_[r + 1], false, piece_u);

    // Apply the swap.
    set_crossed(u, v, true);
    pos_to_wire_[r] = v;
    pos_to_wire_[r + 1] = u;
    wire_to_pos_[u] = r + 1;
    wire_to_pos_[v] = r;
    ++crossings_;
  }

  void record_triangle(const Face& f, int gap) {
    triangles_.push_back({f.opening_col, gap});
    std::int32_t sides[3];
    if (f.mid_below) {
      sides[0] = f.upper_piece;  // spans the whole face
      sides[1] = f.lower_piece;  // opening to mid
      sides[2] = f.mid_piece;    // mid to closing
    } else {
      sides[0] = f.lower_piece;
      sides[1] = f.upper_piece;
      sides[2] = f.mid_piece;
    }
    for (std::int32_t pid : sides) {
      if (pid < 0)
        throw std::logic_error("triangle side without a bounded segment");
      used_.push_back({pieces_[pid].wire, pieces_[pid].index});
      ++wire_contact_[pieces_[pid].wire];
    }
  }

  int n_;
  bool details_;
  std::vector<int> pos_to_wire_;
  std::vector<int> wire_to_pos_;
  std::vector<std::uint64_t> crossed_bits_;
  std::size_t words_per_row_;
  std::vector<int> cross_count_;
  long crossings_ = 0;
  int depth_ = 0;

  std::vector<Face> faces_;
  std::vector<Piece> pieces_;
  std::vector<std::int32_t> open_face_;
  std::vector<Frame> frames_;

  long long triangle_count_ = 0;
  long long provably_unused_ = 0;
  std::vector<TriangleAt> triangles_;
  std::vector<SegmentId> used_;
  std::vector<int> wire_contact_;
};

}  // namespace trigon::detail
