#include "latfam/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace latfam::io {

namespace {

constexpr double kPitch = 24.0;
constexpr std::int64_t kPad = 1;

const char* kDirectionColors[4] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
const char* kChainColors[6] = {"#000000", "#555555", "#888888", "#aaaaaa", "#c4c4c4", "#dddddd"};

struct Frame {
  std::int64_t x0, y0, x1, y1;  // padded lattice bounding box
  double px(std::int64_t x) const { return static_cast<double>(x - x0) * kPitch; }
  double py(std::int64_t y) const { return static_cast<double>(y1 - y) * kPitch; }
  double pxf(double x) const { return (x - static_cast<double>(x0)) * kPitch; }
  double pyf(double y) const { return (static_cast<double>(y1) - y) * kPitch; }
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::fixed << v;
  return ss.str();
}

// Clip the line m x + n y = c against the padded box; false when disjoint.
bool clip_line(const Frame& f, double m, double n, double c, std::array<double, 4>& seg) {
  double norm = m * m + n * n;
  double bx = m * c / norm, by = n * c / norm;  // a point on the line
  double dx = -n, dy = m;                       // its direction
  double t0 = -1e18, t1 = 1e18;
  auto clip1 = [&](double p, double q) {
    // p·t <= q
    if (p == 0.0) return q >= 0.0;
    double r = q / p;
    if (p < 0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  double lo_x = f.x0 - 0.25, hi_x = f.x1 + 0.25;
  double lo_y = f.y0 - 0.25, hi_y = f.y1 + 0.25;
  if (!clip1(-dx, bx - lo_x)) return false;
  if (!clip1(dx, hi_x - bx)) return false;
  if (!clip1(-dy, by - lo_y)) return false;
  if (!clip1(dy, hi_y - by)) return false;
  if (t0 > t1) return false;
  seg = {bx + t0 * dx, by + t0 * dy, bx + t1 * dx, by + t1 * dy};
  return true;
}

void draw_polygon(std::ostringstream& out, const Frame& f, const geom::LatticePolygon& g,
                  const char* color, double stroke) {
  if (g.dim() == 2) {
    out << "  <polygon fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke
        << "\" points=\"";
    for (const auto& v : g.vertices()) out << fmt(f.px(v.x)) << "," << fmt(f.py(v.y)) << " ";
    out << "\"/>\n";
  } else if (g.dim() == 1) {
    const auto& v = g.vertices();
    out << "  <line stroke=\"" << color << "\" stroke-width=\"" << stroke << "\" x1=\""
        << fmt(f.px(v[0].x)) << "\" y1=\"" << fmt(f.py(v[0].y)) << "\" x2=\"" << fmt(f.px(v[1].x))
        << "\" y2=\"" << fmt(f.py(v[1].y)) << "\"/>\n";
  } else {
    const auto& v = g.vertices()[0];
    out << "  <circle fill=\"" << color << "\" cx=\"" << fmt(f.px(v.x)) << "\" cy=\""
        << fmt(f.py(v.y)) << "\" r=\"4\"/>\n";
  }
}

}  // namespace

std::string render_svg(const geom::LatticePolygon& g, const width::WidthReport& report) {
  if (g.dim() <= 1) fail(Errc::DegeneratePolygon, "plotting needs a dim-2 polygon");

  Frame f{g.min_corner().x - kPad, g.min_corner().y - kPad, g.max_corner().x + kPad,
          g.max_corner().y + kPad};
  double w = static_cast<double>(f.x1 - f.x0) * kPitch;
  double h = static_cast<double>(f.y1 - f.y0) * kPitch;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(-kPitch / 2) << " "
      << fmt(-kPitch / 2) << " " << fmt(w + kPitch) << " " << fmt(h + kPitch) << "\">\n";
  out << "  <rect x=\"" << fmt(-kPitch / 2) << "\" y=\"" << fmt(-kPitch / 2) << "\" width=\""
      << fmt(w + kPitch) << "\" height=\"" << fmt(h + kPitch) << "\" fill=\"#ffffff\"/>\n";

  // level lines h(x) = c, one bundle per optimal direction
  std::size_t color_idx = 0;
  for (const auto& dir : report.optimal) {
    const char* color = kDirectionColors[color_idx % 4];
    ++color_idx;
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (const auto& v : g.vertices()) {
      std::int64_t val = add_ck(mul_ck(dir.m, v.x), mul_ck(dir.n, v.y));
      if (first) {
        lo = hi = val;
        first = false;
      } else {
        lo = std::min(lo, val);
        hi = std::max(hi, val);
      }
    }
    for (std::int64_t c = lo; c <= hi; ++c) {
      std::array<double, 4> seg;
      if (!clip_line(f, static_cast<double>(dir.m), static_cast<double>(dir.n),
                     static_cast<double>(c), seg))
        continue;
      out << "  <line stroke=\"" << color << "\" stroke-width=\"1\" stroke-dasharray=\"4 3\" x1=\""
          << fmt(f.pxf(seg[0])) << "\" y1=\"" << fmt(f.pyf(seg[1])) << "\" x2=\""
          << fmt(f.pxf(seg[2])) << "\" y2=\"" << fmt(f.pyf(seg[3])) << "\"/>\n";
    }
  }

  // lattice dots
  for (std::int64_t y = f.y0; y <= f.y1; ++y)
    for (std::int64_t x = f.x0; x <= f.x1; ++x)
      out << "  <circle fill=\"#c0c0c0\" cx=\"" << fmt(f.px(x)) << "\" cy=\"" << fmt(f.py(y))
          << "\" r=\"2\"/>\n";

  // the polygon and its adjoint chain, outermost first
  if (report.trace.empty()) {
    draw_polygon(out, f, g, kChainColors[0], 2.0);
  } else {
    for (std::size_t i = 0; i < report.trace.size(); ++i)
      draw_polygon(out, f, report.trace[i].polygon, kChainColors[std::min<std::size_t>(i, 5)],
                   i == 0 ? 2.0 : 1.5);
  }

  out << "</svg>\n";
  return out.str();
}

void emit_svg(const geom::LatticePolygon& g, const width::WidthReport& report,
              const std::string& path) {
  std::string svg = render_svg(g, report);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot open " + path + " for writing");
  out << svg;
  if (!out) fail(Errc::IoError, "failed writing " + path);
}

}  // namespace latfam::io
