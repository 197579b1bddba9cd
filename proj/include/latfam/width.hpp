#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latfam/polygon.hpp"
#include "latfam/viewangle.hpp"

namespace latfam::width {

// Adjoint-recursion case of a polygon (row of the case table):
//   A0  minimal (terminal)
//   A1  standard triangle with standard-triangle adjoint
//   A2  not standard, adjoint standard
//   A3  not standard, adjoint minimal and not standard
//   A4  not standard, adjoint not minimal and not standard
enum class CaseLabel { A0, A1, A2, A3, A4 };

const char* case_label_name(CaseLabel c);

struct TraceEntry {
  geom::LatticePolygon polygon;
  CaseLabel label;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Width, the full optimal direction set (sign-canonical, sorted), and the
// adjoint-chain trace. finite == false only for width-0 degenerate inputs,
// where the optimal set is infinite; `optimal` then holds the primitive
// annihilating direction of a segment (empty for a point).
struct WidthReport {
  std::int64_t width = 0;
  std::vector<Viewangle> optimal;
  std::vector<TraceEntry> trace;
  bool finite = true;

  friend bool operator==(const WidthReport&, const WidthReport&) = default;
};

// max h - min h over the polygon (vertices suffice by convexity).
std::int64_t width_of(const geom::LatticePolygon& g, const Viewangle& h);

// Tightness against the adjoint polygon. Throws NoAdjoint when the polygon
// has no interior lattice points.
bool is_max_tight(const geom::LatticePolygon& g, const Viewangle& h);
bool is_min_tight(const geom::LatticePolygon& g, const Viewangle& h);
bool is_tight(const geom::LatticePolygon& g, const Viewangle& h);

// True when the max (resp. min) face of h has positive length.
bool is_max_edge(const geom::LatticePolygon& g, const Viewangle& h);
bool is_min_edge(const geom::LatticePolygon& g, const Viewangle& h);
bool is_edge(const geom::LatticePolygon& g, const Viewangle& h);

CaseLabel classify_case(const geom::LatticePolygon& g);

// Exhaustive search over all primitive sign-canonical directions inside a
// provably sufficient box (see the bound derivation in width.cpp).
WidthReport solve_bruteforce(const geom::LatticePolygon& g);

// Adjoint-chain recursion; agrees with solve_bruteforce on every dim-2 input.
WidthReport solve(const geom::LatticePolygon& g);

// h composed with the inverse linear part of `map`, sign-canonicalized.
// Carries optimal directions of g to optimal directions of apply(map, g).
Viewangle transform_covector(const Viewangle& h, const geom::UnimodularAffineMap& map);

}  // namespace latfam::width
