#include "latfam/width.hpp"

#include <algorithm>

#include "latfam/width_kernels.hpp"

namespace latfam::width {

using geom::LatticePoint;
using geom::LatticePolygon;

const char* case_label_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::A0: return "A0";
    case CaseLabel::A1: return "A1";
    case CaseLabel::A2: return "A2";
    case CaseLabel::A3: return "A3";
    case CaseLabel::A4: return "A4";
  }
  return "?";
}

namespace {

std::int64_t eval(const Viewangle& h, const LatticePoint& p) {
  return add_ck(mul_ck(h.m, p.x), mul_ck(h.n, p.y));
}

std::int64_t max_on(const LatticePolygon& g, const Viewangle& h) {
  std::int64_t best = eval(h, g.vertices()[0]);
  for (const auto& v : g.vertices()) best = std::max(best, eval(h, v));
  return best;
}

std::int64_t min_on(const LatticePolygon& g, const Viewangle& h) {
  std::int64_t best = eval(h, g.vertices()[0]);
  for (const auto& v : g.vertices()) best = std::min(best, eval(h, v));
  return best;
}

geom::LatticePolygon require_adjoint(const LatticePolygon& g) {
  auto adj = geom::adjoint(g);
  if (!adj) fail(Errc::NoAdjoint, "polygon has no interior lattice points");
  return *adj;
}

// Primitive direction vanishing on a segment polygon.
Viewangle annihilator(const LatticePolygon& g) {
  LatticePoint d = geom::sub(g.vertices()[1], g.vertices()[0]);
  std::int64_t gg = gcd64(d.x, d.y);
  return Viewangle{neg_ck(d.y / gg), d.x / gg}.canonical();
}

WidthReport degenerate_report(const LatticePolygon& g) {
  WidthReport r;
  r.width = 0;
  r.finite = false;
  if (g.dim() == 1) r.optimal.push_back(annihilator(g));
  return r;
}

// The three primitive directions constant on the edges of a triangle.
std::vector<Viewangle> edge_viewangles(const LatticePolygon& g) {
  std::vector<Viewangle> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    LatticePoint d = geom::sub(vs[(i + 1) % vs.size()], vs[i]);
    std::int64_t gg = gcd64(d.x, d.y);
    out.push_back(Viewangle{neg_ck(d.y / gg), d.x / gg}.canonical());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::int64_t width_of(const LatticePolygon& g, const Viewangle& h) {
  if (h.is_zero()) fail(Errc::Internal, "width of the zero viewangle");
  return sub_ck(max_on(g, h), min_on(g, h));
}

bool is_max_tight(const LatticePolygon& g, const Viewangle& h) {
  LatticePolygon adj = require_adjoint(g);
  return max_on(g, h) == add_ck(max_on(adj, h), 1);
}

bool is_min_tight(const LatticePolygon& g, const Viewangle& h) {
  LatticePolygon adj = require_adjoint(g);
  return min_on(g, h) == sub_ck(min_on(adj, h), 1);
}

bool is_tight(const LatticePolygon& g, const Viewangle& h) {
  return is_max_tight(g, h) && is_min_tight(g, h);
}

bool is_max_edge(const LatticePolygon& g, const Viewangle& h) {
  std::int64_t top = max_on(g, h);
  int hits = 0;
  for (const auto& v : g.vertices())
    if (eval(h, v) == top && ++hits >= 2) return true;
  return false;
}

bool is_min_edge(const LatticePolygon& g, const Viewangle& h) {
  std::int64_t bot = min_on(g, h);
  int hits = 0;
  for (const auto& v : g.vertices())
    if (eval(h, v) == bot && ++hits >= 2) return true;
  return false;
}

bool is_edge(const LatticePolygon& g, const Viewangle& h) {
  return is_max_edge(g, h) && is_min_edge(g, h);
}

CaseLabel classify_case(const LatticePolygon& g) {
  // A point is not "minimal" (that notion excludes points) but terminates
  // the recursion all the same; it is grouped with A0.
  if (g.dim() == 0 || geom::is_minimal(g)) return CaseLabel::A0;
  if (geom::is_standard_triangle(g)) return CaseLabel::A1;
  LatticePolygon adj = require_adjoint(g);
  if (geom::is_standard_triangle(adj)) return CaseLabel::A2;
  if (geom::is_minimal(adj)) return CaseLabel::A3;
  return CaseLabel::A4;
}

WidthReport solve_bruteforce(const LatticePolygon& g) {
  if (g.dim() <= 1) return degenerate_report(g);

  const std::int64_t w0 =
      std::min(width_of(g, {1, 0}), width_of(g, {0, 1}));
  if (w0 <= 0) fail(Errc::Internal, "dim-2 polygon with zero axis width");

  // Sound candidate box: every direction h satisfies width(h) >= |h·(u-v)|
  // for vertices u,v, so an optimal h obeys |h·d1| <= w0 and |h·d2| <= w0 for
  // any independent vertex differences d1,d2. Cramer's rule then bounds
  //   |m| <= w0(|d1.y|+|d2.y|)/|det|,  |n| <= w0(|d1.x|+|d2.x|)/|det|.
  // d1,d2 are picked to make |det| large, which keeps the box small.
  const auto& vs = g.vertices();
  LatticePoint d1{0, 0};
  std::int64_t best_len = -1;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      LatticePoint d = geom::sub(vs[j], vs[i]);
      std::int64_t len = add_ck(abs_ck(d.x), abs_ck(d.y));
      if (len > best_len) {
        best_len = len;
        d1 = d;
      }
    }
  LatticePoint d2{0, 0};
  std::int64_t best_det = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      LatticePoint d = geom::sub(vs[j], vs[i]);
      std::int64_t dt = abs_ck(geom::det2(d1, d));
      if (dt > best_det) {
        best_det = dt;
        d2 = d;
      }
    }
  if (best_det == 0) fail(Errc::Internal, "no independent vertex differences on a dim-2 polygon");

  const std::int64_t m_bound =
      floordiv(mul_ck(w0, add_ck(abs_ck(d1.y), abs_ck(d2.y))), best_det);
  const std::int64_t n_bound =
      floordiv(mul_ck(w0, add_ck(abs_ck(d1.x), abs_ck(d2.x))), best_det);

  std::vector<Viewangle> candidates;
  for (std::int64_t n = 1; n <= n_bound; ++n) candidates.push_back({0, n});
  for (std::int64_t m = 1; m <= m_bound; ++m)
    for (std::int64_t n = -n_bound; n <= n_bound; ++n) candidates.push_back({m, n});
  std::erase_if(candidates, [](const Viewangle& h) { return !h.is_primitive(); });

  std::vector<std::int64_t> widths = batch_widths(vs, candidates);

  WidthReport rep;
  rep.width = *std::min_element(widths.begin(), widths.end());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (widths[i] == rep.width) rep.optimal.push_back(candidates[i]);
  std::sort(rep.optimal.begin(), rep.optimal.end());
  return rep;
}

namespace {

struct Level {
  std::int64_t width;
  std::vector<Viewangle> optimal;
};

Level solve_level(const LatticePolygon& g, std::vector<TraceEntry>& trace) {
  CaseLabel label = classify_case(g);
  trace.push_back({g, label});

  if (label == CaseLabel::A0) {
    if (g.dim() <= 1) {
      // Segment adjoint: width 0, the annihilating direction is the (unique
      // primitive) optimal representative, and it is an edge of the segment,
      // hence tight one level up.
      WidthReport r = degenerate_report(g);
      return {0, r.optimal};
    }
    WidthReport r = solve_bruteforce(g);
    return {r.width, std::move(r.optimal)};
  }

  LatticePolygon adj = require_adjoint(g);
  Level sub = solve_level(adj, trace);

  switch (label) {
    case CaseLabel::A1:
      return {add_ck(sub.width, 3), edge_viewangles(g)};
    case CaseLabel::A2: {
      std::vector<Viewangle> kept;
      for (const auto& h : sub.optimal)
        if (is_tight(g, h)) kept.push_back(h);
      if (kept.empty()) fail(Errc::Internal, "A2 tightness filter produced an empty set");
      return {add_ck(sub.width, 2), std::move(kept)};
    }
    case CaseLabel::A3:
    case CaseLabel::A4: {
      if (label == CaseLabel::A3 && geom::is_thin_triangle(adj)) {
        for (const auto& h : sub.optimal)
          if (!is_tight(g, h))
            fail(Errc::Internal, "optimal direction over a thin-triangle adjoint is not tight");
      }
      return {add_ck(sub.width, 2), sub.optimal};
    }
    default:
      fail(Errc::Internal, "unreachable case label");
  }
}

}  // namespace

WidthReport solve(const LatticePolygon& g) {
  if (g.dim() <= 1) return degenerate_report(g);
  WidthReport rep;
  Level top = solve_level(g, rep.trace);
  rep.width = top.width;
  rep.optimal = std::move(top.optimal);
  std::sort(rep.optimal.begin(), rep.optimal.end());
  rep.finite = true;
  if (rep.optimal.empty() || rep.optimal.size() > 4)
    fail(Errc::Internal, "optimal set size out of the guaranteed 1..4 range");
  return rep;
}

Viewangle transform_covector(const Viewangle& h, const geom::UnimodularAffineMap& map) {
  geom::UnimodularAffineMap inv = map.inverse();
  // Row vector times the inverse linear part.
  Viewangle out{add_ck(mul_ck(h.m, inv.a), mul_ck(h.n, inv.c)),
                add_ck(mul_ck(h.m, inv.b), mul_ck(h.n, inv.d))};
  return out.canonical();
}

}  // namespace latfam::width
