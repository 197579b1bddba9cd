#include "latfam/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace latfam::geom {

LatticePolygon LatticePolygon::hull_of(std::span<const LatticePoint> points) {
  if (points.empty()) fail(Errc::EmptyInput, "convex hull of an empty point set");

  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolygon g;
  if (pts.size() == 1) {
    g.verts_ = pts;
    g.dim_ = 0;
    return g;
  }

  // Andrew monotone chain, strict turns only (collinear points dropped).
  std::vector<LatticePoint> hull;
  hull.reserve(pts.size() + 1);
  for (const LatticePoint& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // last point repeats the first

  if (hull.size() == 2) {
    g.verts_ = {std::min(hull[0], hull[1]), std::max(hull[0], hull[1])};
    g.dim_ = 1;
    return g;
  }
  g.verts_ = std::move(hull);  // starts at the lexicographic minimum, CCW
  g.dim_ = 2;
  return g;
}

LatticePolygon LatticePolygon::from_ccw_cycle(std::vector<LatticePoint> cycle) {
  if (cycle.size() < 3) fail(Errc::Internal, "ccw cycle needs at least 3 vertices");
  auto start = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), start, cycle.end());
  LatticePolygon g;
  g.verts_ = std::move(cycle);
  g.dim_ = 2;
  return g;
}

LatticePoint LatticePolygon::min_corner() const {
  LatticePoint c = verts_.front();
  for (const auto& v : verts_) {
    c.x = std::min(c.x, v.x);
    c.y = std::min(c.y, v.y);
  }
  return c;
}

LatticePoint LatticePolygon::max_corner() const {
  LatticePoint c = verts_.front();
  for (const auto& v : verts_) {
    c.x = std::max(c.x, v.x);
    c.y = std::max(c.y, v.y);
  }
  return c;
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  if (dim_ == 0) return p == verts_[0];
  if (dim_ == 1) {
    if (cross(verts_[0], verts_[1], p) != 0) return false;
    return verts_[0] <= p && p <= verts_[1];
  }
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const LatticePoint& a = verts_[i];
    const LatticePoint& b = verts_[(i + 1) % verts_.size()];
    if (cross(a, b, p) < 0) return false;
  }
  return true;
}

bool LatticePolygon::strictly_contains(const LatticePoint& p) const {
  if (dim_ <= 1) return false;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const LatticePoint& a = verts_[i];
    const LatticePoint& b = verts_[(i + 1) % verts_.size()];
    if (cross(a, b, p) <= 0) return false;
  }
  return true;
}

LatticePolygon convex_hull(std::span<const LatticePoint> points) {
  return LatticePolygon::hull_of(points);
}

namespace {

// For a fixed integer row y, intersect the half-plane constraints of all
// edges, solved for x. `strict` selects interior (cross >= 1) vs closed
// (cross >= 0) containment. Returns false when the row is empty.
bool row_interval(const LatticePolygon& g, std::int64_t y, bool strict, std::int64_t& xlo,
                  std::int64_t& xhi) {
  xlo = g.min_corner().x;
  xhi = g.max_corner().x;
  const auto& vs = g.vertices();
  const std::int64_t slack = strict ? 1 : 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const LatticePoint& a = vs[i];
    const LatticePoint& b = vs[(i + 1) % vs.size()];
    std::int64_t ex = sub_ck(b.x, a.x);
    std::int64_t ey = sub_ck(b.y, a.y);
    // constraint: ex*(y - a.y) - ey*(x - a.x) >= slack
    std::int64_t rhs = sub_ck(add_ck(mul_ck(ex, sub_ck(y, a.y)), mul_ck(ey, a.x)), slack);
    if (ey > 0) {
      xhi = std::min(xhi, floordiv(rhs, ey));
    } else if (ey < 0) {
      xlo = std::max(xlo, ceildiv(rhs, ey));
    } else {
      if (rhs < 0) return false;
    }
    if (xlo > xhi) return false;
  }
  return true;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const LatticePolygon& g) {
  std::vector<LatticePoint> out;
  if (g.dim() == 0) {
    out.push_back(g.vertices()[0]);
    return out;
  }
  if (g.dim() == 1) {
    LatticePoint a = g.vertices()[0], b = g.vertices()[1];
    LatticePoint d = sub(b, a);
    std::int64_t steps = gcd64(d.x, d.y);
    LatticePoint p{d.x / steps, d.y / steps};
    for (std::int64_t k = 0; k <= steps; ++k)
      out.push_back({add_ck(a.x, mul_ck(k, p.x)), add_ck(a.y, mul_ck(k, p.y))});
    std::sort(out.begin(), out.end());
    return out;
  }
  for (std::int64_t y = g.min_corner().y; y <= g.max_corner().y; ++y) {
    std::int64_t xlo, xhi;
    if (!row_interval(g, y, /*strict=*/false, xlo, xhi)) continue;
    for (std::int64_t x = xlo; x <= xhi; ++x) out.push_back({x, y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> interior_points(const LatticePolygon& g) {
  std::vector<LatticePoint> out;
  if (g.dim() <= 1) return out;
  for (std::int64_t y = g.min_corner().y + 1; y <= g.max_corner().y - 1; ++y) {
    std::int64_t xlo, xhi;
    if (!row_interval(g, y, /*strict=*/true, xlo, xhi)) continue;
    for (std::int64_t x = xlo; x <= xhi; ++x) out.push_back({x, y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t interior_point_count(const LatticePolygon& g) {
  if (g.dim() <= 1) return 0;
  std::int64_t n = 0;
  for (std::int64_t y = g.min_corner().y + 1; y <= g.max_corner().y - 1; ++y) {
    std::int64_t xlo, xhi;
    if (!row_interval(g, y, /*strict=*/true, xlo, xhi)) continue;
    n = add_ck(n, sub_ck(xhi, xlo) + 1);
  }
  return n;
}

std::optional<LatticePolygon> adjoint(const LatticePolygon& g) {
  std::vector<LatticePoint> inner = interior_points(g);
  if (inner.empty()) return std::nullopt;
  return LatticePolygon::hull_of(inner);
}

LatticePolygon apply(const UnimodularAffineMap& m, const LatticePolygon& g) {
  std::vector<LatticePoint> imgs;
  imgs.reserve(g.vertices().size());
  for (const auto& v : g.vertices()) imgs.push_back(m.apply(v));
  if (g.dim() < 2) return LatticePolygon::hull_of(imgs);
  if (m.det() < 0) std::reverse(imgs.begin(), imgs.end());
  return LatticePolygon::from_ccw_cycle(std::move(imgs));
}

std::int64_t doubled_area(const LatticePolygon& g) {
  if (g.dim() <= 1) return 0;
  const auto& vs = g.vertices();
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const LatticePoint& a = vs[i];
    const LatticePoint& b = vs[(i + 1) % vs.size()];
    twice = add_ck(twice, det2(a, b));
  }
  return abs_ck(twice);
}

std::int64_t boundary_point_count(const LatticePolygon& g) {
  if (g.dim() == 0) return 1;
  if (g.dim() == 1) {
    LatticePoint d = sub(g.vertices()[1], g.vertices()[0]);
    return add_ck(gcd64(d.x, d.y), 1);
  }
  const auto& vs = g.vertices();
  std::int64_t n = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    LatticePoint d = sub(vs[(i + 1) % vs.size()], vs[i]);
    n = add_ck(n, gcd64(d.x, d.y));
  }
  return n;
}

LatticePolygon shoe(std::int64_t l, std::int64_t m, std::int64_t n) {
  if (l < 0 || m < 0 || n < 0) fail(Errc::InvalidShoeParameters, "parameters must be nonnegative");
  if (l == 0 && m == 0 && n == 0) fail(Errc::InvalidShoeParameters, "parameters must not all be zero");
  LatticePoint pts[4] = {{0, 0}, {0, l}, {m, l}, {add_ck(m, n), 0}};
  return LatticePolygon::hull_of(pts);
}

std::optional<std::int64_t> is_standard_triangle(const LatticePolygon& g) {
  if (g.dim() != 2 || g.vertices().size() != 3) return std::nullopt;
  std::int64_t a2 = doubled_area(g);
  auto l = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(a2))));
  while (mul_ck(l, l) < a2) ++l;
  while (l > 0 && mul_ck(l, l) > a2) --l;
  if (l <= 0 || mul_ck(l, l) != a2) return std::nullopt;
  if (normalize(g).polygon == normalize(shoe(l, 0, l)).polygon) return l;
  return std::nullopt;
}

std::optional<std::int64_t> is_thin_triangle(const LatticePolygon& g) {
  if (g.dim() != 2 || g.vertices().size() != 3) return std::nullopt;
  std::int64_t l = doubled_area(g);
  if (l <= 1) return std::nullopt;
  if (normalize(g).polygon == normalize(shoe(1, 0, l)).polygon) return l;
  return std::nullopt;
}

bool is_minimal(const LatticePolygon& g) {
  if (g.dim() == 0) return false;
  return interior_point_count(g) <= 1;
}

}  // namespace latfam::geom
