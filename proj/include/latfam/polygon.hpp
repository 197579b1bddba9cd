#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latfam/point.hpp"

namespace latfam::geom {

// Convex lattice polygon, stored as its extreme points in counter-clockwise
// order starting at the lexicographically smallest vertex.
//
//   dim 2: >= 3 vertices, strictly convex cycle
//   dim 1: the two segment endpoints, lexicographically ordered
//   dim 0: a single point
class LatticePolygon {
 public:
  LatticePolygon() = default;

  // Convex hull of a nonempty point set. Duplicates are merged, collinear
  // input collapses to dim <= 1. Throws EmptyInput.
  static LatticePolygon hull_of(std::span<const LatticePoint> points);

  // Wraps an already-convex CCW vertex cycle without recomputing the hull
  // (used where hull cross products could overflow, e.g. normalize).
  // Precondition: distinct extreme points of a dim-2 polygon, CCW.
  static LatticePolygon from_ccw_cycle(std::vector<LatticePoint> cycle);

  int dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return verts_; }

  LatticePoint min_corner() const;  // componentwise bounding-box corner
  LatticePoint max_corner() const;

  bool contains(const LatticePoint& p) const;           // boundary inclusive
  bool strictly_contains(const LatticePoint& p) const;  // interior only

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::vector<LatticePoint> verts_;
  int dim_ = -1;
};

struct NormalizeResult {
  LatticePolygon polygon;       // canonical representative
  UnimodularAffineMap map;      // carries the input onto `polygon`
};

LatticePolygon convex_hull(std::span<const LatticePoint> points);

// All lattice points of the polygon, boundary included, sorted lexicographically.
std::vector<LatticePoint> lattice_points(const LatticePolygon& g);

// Lattice points strictly inside; empty for dim <= 1. Sorted lexicographically.
std::vector<LatticePoint> interior_points(const LatticePolygon& g);
std::int64_t interior_point_count(const LatticePolygon& g);

// Hull of the interior lattice points; nullopt when there are none.
std::optional<LatticePolygon> adjoint(const LatticePolygon& g);

// Canonical representative under lattice equivalence plus the map to it.
// Idempotent and constant on equivalence classes.
NormalizeResult normalize(const LatticePolygon& g);

LatticePolygon apply(const UnimodularAffineMap& m, const LatticePolygon& g);

// Twice the area (shoelace); 0 for dim <= 1.
std::int64_t doubled_area(const LatticePolygon& g);

// Number of lattice points on the boundary.
std::int64_t boundary_point_count(const LatticePolygon& g);

// ConvexHull((0,0),(0,l),(m,l),(m+n,0)). Parameters nonnegative, not all zero.
LatticePolygon shoe(std::int64_t l, std::int64_t m, std::int64_t n);

// Detection up to lattice equivalence. A standard triangle is shoe(l,0,l)
// with l > 0, a thin triangle is shoe(1,0,l) with l > 1.
std::optional<std::int64_t> is_standard_triangle(const LatticePolygon& g);
std::optional<std::int64_t> is_thin_triangle(const LatticePolygon& g);

// Not a point, and at most one interior lattice point.
bool is_minimal(const LatticePolygon& g);

}  // namespace latfam::geom
