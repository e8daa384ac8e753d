#include "hexmo/render.hpp"

#include "hexmo/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace hexmo {

namespace {

double apothem(Geometry g) { return g == Geometry::hex ? std::sqrt(3.0) / 2.0 : 0.5; }

Point to_board(const Board& b, CellId c, std::pair<double, double> t) {
  const Point p = b.center(c);
  const double a = apothem(b.geometry());
  return {p.x + a * t.first, p.y - a * t.second};
}

// Polyline of one strand traversal: slot point, two points on the chord, slot point.
std::vector<Point> strand_polyline(const Board& b, CellId c, int from, int to) {
  const auto ch = strand_chord(b.geometry(), from, to);
  auto at = [&](double t) {
    return std::pair{ch[0].first + t * (ch[1].first - ch[0].first), ch[0].second + t * (ch[1].second - ch[0].second)};
  };
  const bool forward = from < to;
  return {b.slot_point(c, from), to_board(b, c, at(forward ? 0.15 : 0.85)), to_board(b, c, at(forward ? 0.85 : 0.15)),
          b.slot_point(c, to)};
}

// Parameter along segment p0-p1 where it meets q0-q1, if it does.
std::optional<double> segment_hit(Point p0, Point p1, Point q0, Point q1) {
  const double rx = p1.x - p0.x, ry = p1.y - p0.y, sx = q1.x - q0.x, sy = q1.y - q0.y;
  const double den = rx * sy - ry * sx;
  if (std::abs(den) < 1e-12) return std::nullopt;
  const double qx = q0.x - p0.x, qy = q0.y - p0.y;
  const double t = (qx * sy - qy * sx) / den, u = (qx * ry - qy * rx) / den;
  if (t < -1e-9 || t > 1 + 1e-9 || u < -1e-9 || u > 1 + 1e-9) return std::nullopt;
  return t;
}

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct ClosedPolyline {
  std::vector<Point> pts;
  std::vector<double> at;  // arc length at each point
  double length = 0;

  void add(Point p) {
    if (!pts.empty()) length += dist(pts.back(), p);
    at.push_back(length);
    pts.push_back(p);
  }
  void close() { length += dist(pts.back(), pts.front()); }

  Point point_at(double s) const {
    s = std::fmod(s, length);
    if (s < 0) s += length;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double end = i + 1 < n ? at[i + 1] : length;
      if (s <= end) {
        const double seg = end - at[i];
        const double t = seg > 0 ? (s - at[i]) / seg : 0.0;
        const Point q = pts[(i + 1) % n];
        return {pts[i].x + t * (q.x - pts[i].x), pts[i].y + t * (q.y - pts[i].y)};
      }
    }
    return pts.front();
  }

  // Vertices strictly between arc lengths u < v (v may exceed length once).
  std::vector<Point> between(double u, double v) const {
    std::vector<Point> out{point_at(u)};
    for (int lap = 0; lap < 2; ++lap)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double s = at[i] + lap * length;
        if (s > u && s < v) out.push_back(pts[i]);
      }
    out.push_back(point_at(v));
    return out;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Frame {
  double min_x, min_y, scale;
  std::string pt(Point p) const { return num((p.x - min_x) * scale) + " " + num((p.y - min_y) * scale); }
};

std::string polyline_d(const Frame& f, const std::vector<Point>& pts, bool closed) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M" : " L") + f.pt(pts[i]);
  if (closed) d += " Z";
  return d;
}

std::vector<Point> tile_outline(const Board& b, CellId c) {
  const Point p = b.center(c);
  std::vector<Point> out;
  if (b.geometry() == Geometry::hex) {
    for (int k = 0; k < 6; ++k) {
      const double a = (90.0 - 60.0 * k) * std::numbers::pi / 180.0;  // pointy top
      out.push_back({p.x + std::cos(a), p.y - std::sin(a)});
    }
  } else {
    out = {{p.x - 0.5, p.y - 0.5}, {p.x + 0.5, p.y - 0.5}, {p.x + 0.5, p.y + 0.5}, {p.x - 0.5, p.y + 0.5}};
  }
  return out;
}

// One SVG path for a link component, cut at each of its under-passages.
std::string component_path(const Mosaic& m, const LinkComponent& comp, const Frame& f, double gap) {
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  ClosedPolyline line;
  std::vector<double> cuts;
  for (const WalkStep& st : comp.walk) {
    auto here = strand_polyline(b, st.cell, st.from, st.to);
    const double base = line.length + (line.pts.empty() ? 0.0 : dist(line.pts.back(), here[0]));
    const FaceId face = m.at(st.cell);
    const auto strands = m.face(st.cell).strands();
    for (const Crossing& x : cat.crossing_list(face)) {
      const bool under = (x.s == st.strand && !x.s_over) || (x.t == st.strand && x.s_over);
      if (!under) continue;
      const Strand& o = strands[static_cast<std::size_t>(x.s == st.strand ? x.t : x.s)];
      const auto other = strand_polyline(b, st.cell, o.a, o.b);
      double acc = base;
      std::optional<double> hit;
      for (std::size_t i = 0; i + 1 < here.size() && !hit; ++i) {
        for (std::size_t j = 0; j + 1 < other.size() && !hit; ++j)
          if (auto t = segment_hit(here[i], here[i + 1], other[j], other[j + 1]))
            hit = acc + *t * dist(here[i], here[i + 1]);
        if (!hit) acc += dist(here[i], here[i + 1]);
      }
      if (hit) cuts.push_back(*hit);
    }
    for (std::size_t i = 0; i + 1 < here.size(); ++i) line.add(here[i]);
  }
  line.close();
  if (cuts.empty()) return polyline_d(f, line.pts, true);
  std::sort(cuts.begin(), cuts.end());
  std::string d;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const double u = cuts[k] + gap;
    double v = (k + 1 < cuts.size() ? cuts[k + 1] : cuts[0] + line.length) - gap;
    if (v <= u) continue;
    if (!d.empty()) d += " ";
    d += polyline_d(f, line.between(u, v), false);
  }
  return d;
}

std::string complement_path(const Board& b, const ComplementComponent& comp, const Frame& f) {
  std::vector<Point> pts;
  for (const ComplementPiece& pc : comp.walk) {
    const Point a = b.slot_point(pc.cell, pc.from), z = b.slot_point(pc.cell, pc.to), c = b.center(pc.cell);
    pts.push_back(a);
    pts.push_back({((a.x + z.x) / 2 + c.x) / 2, ((a.y + z.y) / 2 + c.y) / 2});
    if (!comp.loop && &pc == &comp.walk.back()) pts.push_back(z);
  }
  return polyline_d(f, pts, comp.loop);
}

}  // namespace

std::string render_svg(const Mosaic& m, const std::optional<ComplementDecomposition>& complement,
                       const SvgOptions& opt) {
  const Board& b = m.board();
  const LinkDiagram d = extract(m);

  double min_x = 1e9, min_y = 1e9, max_x = -1e9, max_y = -1e9;
  for (CellId c = 0; c < b.size(); ++c)
    for (Point p : tile_outline(b, c)) {
      min_x = std::min(min_x, p.x), min_y = std::min(min_y, p.y);
      max_x = std::max(max_x, p.x), max_y = std::max(max_y, p.y);
    }
  const double pad = 0.25;
  const Frame f{min_x - pad, min_y - pad, opt.scale};
  const double width = (max_x - min_x + 2 * pad) * opt.scale, height = (max_y - min_y + 2 * pad) * opt.scale;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  if (opt.outline) {
    out += "  <g class=\"tiles\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\">\n";
    for (CellId c = 0; c < b.size(); ++c)
      out += "    <path class=\"tile\" d=\"" + polyline_d(f, tile_outline(b, c), true) + "\"/>\n";
    out += "  </g>\n";
  }
  if (complement && !complement->components.empty()) {
    out += "  <g class=\"complement\" fill=\"none\" stroke=\"" + opt.complement_color +
           "\" stroke-width=\"2\" stroke-dasharray=\"4 3\">\n";
    for (const ComplementComponent& comp : complement->components)
      out += "    <path class=\"complement\" d=\"" + complement_path(b, comp, f) + "\"/>\n";
    out += "  </g>\n";
  }
  out += "  <g class=\"link\" fill=\"none\" stroke=\"" + opt.strand_color +
         "\" stroke-width=\"3\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  for (const LinkComponent& comp : d.components)
    out += "    <path class=\"strand\" d=\"" + component_path(m, comp, f, opt.gap) + "\"/>\n";
  out += "  </g>\n</svg>\n";
  return out;
}

std::string render_ascii(const Mosaic& m) {
  const Board& b = m.board();
  std::size_t w = 1;
  for (CellId c = 0; c < b.size(); ++c) w = std::max(w, m.catalog().code(m.at(c)).size());
  const std::size_t cellw = w + 1;
  std::string out;
  for (int row = 1; row <= b.row_count(); ++row) {
    std::string line;
    if (b.geometry() == Geometry::hex)
      line.assign(static_cast<std::size_t>(std::abs(b.radius() - row)) * cellw / 2, ' ');
    for (int col = 1; col <= b.row_length(row); ++col) {
      std::string code = m.catalog().code(m.at(b.from_row_col(row, col)));
      code.resize(cellw, ' ');
      line += code;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace hexmo
