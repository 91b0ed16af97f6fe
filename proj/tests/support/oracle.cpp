#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace trigon::testsupport {

namespace {

struct Vertex {
  long x = 0, y = 0;
  std::vector<int> out;  // dart ids, sorted counterclockwise
};

struct Dart {
  int from = 0, to = 0;
  int twin = 0;
  int wire = 0;
  int piece = 0;  // crossings the wire had before this stretch
};

struct Graph {
  std::vector<Vertex> vertices;
  std::vector<Dart> darts;
  std::map<std::pair<long, long>, int> index;

  int vertex(long x, long y) {
    const auto [it, fresh] = index.try_emplace({x, y}, vertices.size());
    if (fresh) vertices.push_back(Vertex{x, y, {}});
    return it->second;
  }

  void edge(int u, int v, int wire, int piece) {
    if (u == v) throw std::logic_error("zero-length edge");
    const int a = static_cast<int>(darts.size());
    darts.push_back(Dart{u, v, a + 1, wire, piece});
    darts.push_back(Dart{v, u, a, wire, piece});
    vertices[u].out.push_back(a);
    vertices[v].out.push_back(a + 1);
  }
};

}  // namespace

OracleReport oracle_faces(const WiringDiagram& d) {
  const int n = d.n();
  const auto& cols = d.columns();
  const long m = static_cast<long>(cols.size());

  // Wire tracks: y = 2*position, columns at x = 4*(k+1), switch arms
  // one unit wide, crossing centers at odd coordinates.
  Graph g;
  std::vector<int> wire_at(n + 1), pos_of(n + 1);
  std::vector<int> done(n + 1, 0);       // crossings per wire so far
  std::vector<int> last_vertex(n + 1);   // tail of each wire's path
  for (int i = 1; i <= n; ++i) {
    wire_at[i] = pos_of[i] = i;
    last_vertex[i] = g.vertex(0, 2 * i);
  }
  const auto extend = [&](int wire, int v) {
    if (v != last_vertex[wire]) {
      g.edge(last_vertex[wire], v, wire, done[wire]);
      last_vertex[wire] = v;
    }
  };
  for (long k = 0; k < m; ++k) {
    const long x = 4 * (k + 1);
    for (const int r : cols[k].rows) {
      const int wu = wire_at[r], wv = wire_at[r + 1];
      const int center = g.vertex(x, 2 * r + 1);
      extend(wu, g.vertex(x - 1, 2 * r));
      extend(wu, center);
      extend(wv, g.vertex(x - 1, 2 * (r + 1)));
      extend(wv, center);
      ++done[wu];
      ++done[wv];
      extend(wu, g.vertex(x + 1, 2 * (r + 1)));
      extend(wv, g.vertex(x + 1, 2 * r));
    }
    for (const int r : cols[k].rows) {
      std::swap(wire_at[r], wire_at[r + 1]);
      pos_of[wire_at[r]] = r;
      pos_of[wire_at[r + 1]] = r + 1;
    }
  }
  for (int w = 1; w <= n; ++w)
    extend(w, g.vertex(4 * (m + 1), 2 * pos_of[w]));

  for (Vertex& v : g.vertices) {
    std::sort(v.out.begin(), v.out.end(), [&](int a, int b) {
      const Vertex& pa = g.vertices[g.darts[a].to];
      const Vertex& pb = g.vertices[g.darts[b].to];
      return std::atan2(double(pa.y - v.y), double(pa.x - v.x)) <
             std::atan2(double(pb.y - v.y), double(pb.x - v.x));
    });
  }

  // Face orbits of dart -> counterclockwise successor of its twin.
  const auto next_dart = [&](int dart) {
    const int t = g.darts[dart].twin;
    const Vertex& v = g.vertices[g.darts[dart].to];
    const auto it = std::find(v.out.begin(), v.out.end(), t);
    if (it == v.out.end()) throw std::logic_error("broken rotation system");
    const std::size_t i = it - v.out.begin();
    return v.out[(i + 1) % v.out.size()];
  };

  OracleReport rep;
  std::vector<char> seen(g.darts.size(), 0);
  for (int start = 0; start < static_cast<int>(g.darts.size()); ++start) {
    if (seen[start]) continue;
    long long area2 = 0;
    std::vector<int> cycle;
    for (int dart = start; !seen[dart]; dart = next_dart(dart)) {
      seen[dart] = 1;
      cycle.push_back(dart);
      const Vertex& a = g.vertices[g.darts[dart].from];
      const Vertex& b = g.vertices[g.darts[dart].to];
      area2 += static_cast<long long>(a.x) * b.y -
               static_cast<long long>(b.x) * a.y;
    }
    // Successor-of-twin keeps the face on the right of each dart, so
    // bounded faces come out clockwise with negative area.
    if (area2 >= 0) continue;
    ++rep.bounded_faces;
    int corners = 0;
    for (const int dart : cycle)
      if (g.vertices[g.darts[dart].to].out.size() >= 3) ++corners;
    if (corners < 3) throw std::logic_error("face with fewer than 3 corners");
    if (corners != 3) continue;
    ++rep.triangles;
    std::vector<SegmentId> sides;
    for (const int dart : cycle) {
      const SegmentId s{g.darts[dart].wire, g.darts[dart].piece};
      if (std::find(sides.begin(), sides.end(), s) == sides.end())
        sides.push_back(s);
    }
    if (sides.size() != 3) throw std::logic_error("triangle without 3 sides");
    for (const SegmentId& s : sides) {
      if (s.index < 1 || s.index > n - 2)
        throw std::logic_error("triangle side on an unbounded piece");
      rep.used.push_back(s);
    }
  }
  std::sort(rep.used.begin(), rep.used.end());
  if (std::adjacent_find(rep.used.begin(), rep.used.end()) != rep.used.end())
    throw std::logic_error("segment bordering two triangles");
  return rep;
}

}  // namespace trigon::testsupport
