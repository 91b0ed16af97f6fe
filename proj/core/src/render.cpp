#include "trigon/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <vector>

#include "trigon/errors.hpp"

namespace trigon {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void check_options(const RenderOptions& opt) {
  if (opt.width <= 0 || opt.height < 0 || opt.margin < 0 ||
      opt.width <= 2 * opt.margin)
    throw Error(Errc::invalid_parameter, "degenerate render dimensions");
}

std::string svg_open(int w, int h) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  s += std::to_string(w);
  s += "\" height=\"";
  s += std::to_string(h);
  s += "\" viewBox=\"0 0 " + std::to_string(w) + ' ' + std::to_string(h) +
       "\">\n";
  s +=
      "<style>.wire{stroke:#26466d;fill:none;stroke-width:1.6}"
      ".switch{fill:#c0392b}.tri{fill:#f2b441;opacity:0.6}"
      ".label{font:12px sans-serif;fill:#26466d}</style>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s;
}

}  // namespace

std::string render_diagram_svg(const WiringDiagram& d,
                               const RenderOptions& opt) {
  check_options(opt);
  const int n = d.n();
  const auto& cols = d.columns();
  const int m = static_cast<int>(cols.size());

  const int height =
      opt.height > 0 ? opt.height : 2 * opt.margin + std::max(1, n - 1) * 28;
  const double x0 = opt.margin + (opt.label_wires ? 18.0 : 0.0);
  const double x1 = opt.width - opt.margin;
  const double dx = (x1 - x0) / (m + 1);
  const double half = std::min(dx * 0.35, 14.0);
  const double dy = n > 1 ? (height - 2.0 * opt.margin) / (n - 1)
                          : 0.0;
  const auto y_of = [&](int pos) {
    return n > 1 ? opt.margin + (pos - 1) * dy : height / 2.0;
  };
  const auto x_of = [&](int col) { return x0 + (col + 1) * dx; };

  // Track every wire through its switches.
  std::vector<std::vector<std::pair<double, double>>> pts(n + 1);
  std::vector<int> wire_at(n + 1), pos_of(n + 1);
  for (int i = 1; i <= n; ++i) {
    wire_at[i] = i;
    pos_of[i] = i;
    pts[i].push_back({x0, y_of(i)});
  }
  std::string switches;
  std::string tris;

  // Open face bookkeeping per gap, enough to shade triangles: where the
  // face was opened and its single allowed side vertex.
  struct OpenFace {
    int open_col = -1;  // -1: unbounded on the left
    int mids = 0;
    double mid_x = 0, mid_y = 0;
  };
  std::vector<OpenFace> open_face(std::max(0, n));  // index = gap 1..n-1

  for (int k = 0; k < m; ++k) {
    const double xc = x_of(k);
    for (int r : cols[k].rows) {
      const int wu = wire_at[r], wv = wire_at[r + 1];
      pts[wu].push_back({xc - half, y_of(r)});
      pts[wu].push_back({xc + half, y_of(r + 1)});
      pts[wv].push_back({xc - half, y_of(r + 1)});
      pts[wv].push_back({xc + half, y_of(r)});
      const double yc = (y_of(r) + y_of(r + 1)) / 2.0;
      switches += "<circle class=\"switch\" cx=\"" + num(xc) + "\" cy=\"" +
                  num(yc) + "\" r=\"2.2\"/>\n";
      if (opt.highlight_triangles) {
        const OpenFace& f = open_face[r];
        if (f.open_col >= 0 && f.mids == 1) {
          tris += "<polygon class=\"tri\" points=\"" + num(x_of(f.open_col)) +
                  ',' + num(yc) + ' ' + num(f.mid_x) + ',' + num(f.mid_y) +
                  ' ' + num(xc) + ',' + num(yc) + "\"/>\n";
        }
        open_face[r] = OpenFace{k, 0, 0, 0};
        if (r - 1 >= 1) {
          OpenFace& g = open_face[r - 1];
          ++g.mids;
          g.mid_x = xc;
          g.mid_y = y_of(r);  // the switch touches the gap above from below
        }
        if (r + 1 <= n - 1) {
          OpenFace& g = open_face[r + 1];
          ++g.mids;
          g.mid_x = xc;
          g.mid_y = y_of(r + 1);
        }
      }
    }
    for (int r : cols[k].rows) {
      std::swap(wire_at[r], wire_at[r + 1]);
      pos_of[wire_at[r]] = r;
      pos_of[wire_at[r + 1]] = r + 1;
    }
  }
  for (int w = 1; w <= n; ++w) pts[w].push_back({x1, y_of(pos_of[w])});

  std::string out = svg_open(opt.width, height);
  out += tris;
  for (int w = 1; w <= n; ++w) {
    out += "<polyline class=\"wire\" points=\"";
    for (std::size_t i = 0; i < pts[w].size(); ++i) {
      if (i) out += ' ';
      out += num(pts[w][i].first) + ',' + num(pts[w][i].second);
    }
    out += "\"/>\n";
    if (opt.label_wires) {
      out += "<text class=\"label\" x=\"" + num(opt.margin * 0.5) + "\" y=\"" +
             num(y_of(w) + 4) + "\">" + std::to_string(w) + "</text>\n";
    }
  }
  out += switches;
  out += "</svg>\n";
  return out;
}

std::string render_arrangement_svg(const LineArrangement& a,
                                   const RenderOptions& opt) {
  check_options(opt);
  const int height = opt.height > 0 ? opt.height : opt.width;
  const std::vector<Crossing> xs = crossings(a);

  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  if (!xs.empty()) {
    lo_x = lo_y = std::numeric_limits<double>::infinity();
    hi_x = hi_y = -lo_x;
    for (const Crossing& c : xs) {
      const double x = c.x.midpoint_double();
      const double y = c.y.midpoint_double();
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  }
  double span_x = hi_x - lo_x, span_y = hi_y - lo_y;
  if (span_x <= 0) span_x = 1;
  if (span_y <= 0) span_y = 1;
  lo_x -= span_x * 0.08;
  hi_x += span_x * 0.08;
  lo_y -= span_y * 0.08;
  hi_y += span_y * 0.08;

  const double sx = (opt.width - 2.0 * opt.margin) / (hi_x - lo_x);
  const double sy = (height - 2.0 * opt.margin) / (hi_y - lo_y);
  const auto px = [&](double x) { return opt.margin + (x - lo_x) * sx; };
  const auto py = [&](double y) { return height - opt.margin - (y - lo_y) * sy; };

  std::string out = svg_open(opt.width, height);
  const long prec = a.precision;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    const double m = a.lines[i].slope.eval(prec).midpoint_double();
    const double a0 = a.lines[i].anchor.eval(prec).midpoint_double();
    // Clip y = m (x - a0) to the world box.
    double x_in = lo_x, x_out = hi_x;
    if (std::abs(m) > 1e-300) {
      const double xa = a0 + lo_y / m, xb = a0 + hi_y / m;
      x_in = std::max(x_in, std::min(xa, xb));
      x_out = std::min(x_out, std::max(xa, xb));
    }
    if (x_in > x_out) continue;  // outside the box
    const double ya = m * (x_in - a0), yb = m * (x_out - a0);
    out += "<line class=\"wire\" x1=\"" + num(px(x_in)) + "\" y1=\"" +
           num(py(ya)) + "\" x2=\"" + num(px(x_out)) + "\" y2=\"" +
           num(py(yb)) + "\"/>\n";
    if (opt.label_wires) {
      out += "<text class=\"label\" x=\"" + num(px(x_out) + 3) + "\" y=\"" +
             num(py(yb)) + "\">" + std::to_string(i + 1) + "</text>\n";
    }
  }
  for (const Crossing& c : xs) {
    out += "<circle class=\"switch\" cx=\"" + num(px(c.x.midpoint_double())) +
           "\" cy=\"" + num(py(c.y.midpoint_double())) + "\" r=\"2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace trigon
