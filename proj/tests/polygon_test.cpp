#include <algorithm>
#include <random>

#include "doctest.h"
#include "latfam/polygon.hpp"
#include "test_util.hpp"

using namespace latfam;
using namespace latfam::geom;
using latfam::testutil::random_polygon;
using latfam::testutil::random_unimodular;

namespace {

LatticePolygon poly(std::initializer_list<LatticePoint> pts) {
  return LatticePolygon::hull_of(std::vector<LatticePoint>(pts));
}

LatticePolygon standard(std::int64_t l) { return shoe(l, 0, l); }

}  // namespace

TEST_CASE("convex hull basics") {
  LatticePolygon pt = poly({{0, 0}});
  CHECK(pt.dim() == 0);
  CHECK(pt.vertices().size() == 1);

  LatticePolygon tri = poly({{0, 0}, {0, 2}, {2, 0}, {1, 1}});
  CHECK(tri.dim() == 2);
  CHECK(tri.vertices() == std::vector<LatticePoint>{{0, 0}, {2, 0}, {0, 2}});

  // duplicated corner in the input, as in the shoe construction
  LatticePolygon box = poly({{0, 0}, {0, 2}, {0, 2}, {2, 0}});
  CHECK(box == standard(2));

  LatticePolygon seg = poly({{0, 0}, {2, 2}, {1, 1}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices() == std::vector<LatticePoint>{{0, 0}, {2, 2}});

  CHECK_THROWS_AS(LatticePolygon::hull_of({}), Error);
}

TEST_CASE("hull against the naive extreme-point test") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LatticePoint> pts;
    int k = static_cast<int>(testutil::rand_int(rng, 1, 12));
    for (int i = 0; i < k; ++i)
      pts.push_back({testutil::rand_int(rng, -6, 6), testutil::rand_int(rng, -6, 6)});
    LatticePolygon g = LatticePolygon::hull_of(pts);

    // p is extreme iff it is not in the hull of the others.
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<LatticePoint> extreme;
    for (const auto& p : pts) {
      std::vector<LatticePoint> rest;
      for (const auto& q : pts)
        if (q != p) rest.push_back(q);
      if (rest.empty() || !LatticePolygon::hull_of(rest).contains(p)) extreme.push_back(p);
    }
    std::vector<LatticePoint> got = g.vertices();
    std::sort(got.begin(), got.end());
    CHECK(got == extreme);
  }
}

TEST_CASE("lattice point enumeration") {
  CHECK(lattice_points(standard(2)).size() == 6);
  CHECK(lattice_points(poly({{0, 0}, {3, 0}})).size() == 4);
  CHECK(lattice_points(shoe(1, 1, 1)).size() == 5);

  CHECK(interior_points(standard(3)) == std::vector<LatticePoint>{{1, 1}});
  CHECK(interior_points(standard(2)).empty());
  CHECK(interior_points(standard(4)) == std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(interior_point_count(standard(4)) == 3);
}

TEST_CASE("interior enumeration against the naive box scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    LatticePolygon g = random_polygon(rng, 8);
    std::vector<LatticePoint> naive_in, naive_all;
    for (std::int64_t y = g.min_corner().y; y <= g.max_corner().y; ++y)
      for (std::int64_t x = g.min_corner().x; x <= g.max_corner().x; ++x) {
        if (g.contains({x, y})) naive_all.push_back({x, y});
        if (g.strictly_contains({x, y})) naive_in.push_back({x, y});
      }
    std::sort(naive_all.begin(), naive_all.end());
    std::sort(naive_in.begin(), naive_in.end());
    CHECK(lattice_points(g) == naive_all);
    CHECK(interior_points(g) == naive_in);
  }
}

TEST_CASE("adjoint polygon") {
  CHECK(adjoint(standard(3))->dim() == 0);
  CHECK(!adjoint(standard(2)).has_value());
  LatticePolygon adj4 = *adjoint(standard(4));
  CHECK(adj4 == poly({{1, 1}, {2, 1}, {1, 2}}));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    LatticePolygon g = random_polygon(rng);
    auto adj = adjoint(g);
    if (!adj) continue;
    for (const auto& v : adj->vertices()) CHECK(g.strictly_contains(v));
  }
}

TEST_CASE("normalize maps small triangles to the unit triangle") {
  NormalizeResult r = normalize(poly({{5, 5}, {6, 5}, {5, 6}}));
  CHECK(r.polygon == poly({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(apply(r.map, poly({{5, 5}, {6, 5}, {5, 6}})) == r.polygon);
}

TEST_CASE("normalize is idempotent and equivalence-invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    LatticePolygon g = random_polygon(rng);
    NormalizeResult r = normalize(g);
    CHECK(apply(r.map, g) == r.polygon);
    CHECK(normalize(r.polygon).polygon == r.polygon);

    UnimodularAffineMap phi = random_unimodular(rng);
    CHECK(normalize(apply(phi, g)).polygon == r.polygon);
  }
}

TEST_CASE("normalize handles degenerate polygons") {
  NormalizeResult pt = normalize(poly({{7, -3}}));
  CHECK(pt.polygon == poly({{0, 0}}));
  NormalizeResult seg = normalize(poly({{2, 3}, {8, 6}}));
  CHECK(seg.polygon == poly({{0, 0}, {3, 0}}));
}

TEST_CASE("shape predicates") {
  std::mt19937_64 rng(19);
  UnimodularAffineMap phi = random_unimodular(rng);
  CHECK(is_standard_triangle(apply(phi, standard(2))) == 2);
  CHECK(is_standard_triangle(standard(1)) == 1);
  CHECK(!is_standard_triangle(shoe(1, 0, 3)).has_value());

  CHECK(is_thin_triangle(poly({{0, 0}, {0, 1}, {3, 0}})) == 3);
  CHECK(!is_thin_triangle(standard(2)).has_value());
  CHECK(!is_thin_triangle(standard(1)).has_value());  // l > 1 required

  CHECK(is_minimal(standard(2)));
  CHECK(is_minimal(standard(3)));
  CHECK(!is_minimal(standard(4)));
  CHECK(is_minimal(poly({{0, 0}, {0, 2}, {2, 0}, {2, 2}})));  // one interior point
  CHECK(!is_minimal(poly({{4, 4}})));                         // a point is not minimal
  CHECK(is_minimal(poly({{0, 0}, {5, 0}})));

  CHECK_THROWS_AS(shoe(0, 0, 0), Error);
  CHECK_THROWS_AS(shoe(-1, 0, 2), Error);
}

TEST_CASE("hull idempotence, Pick consistency, equivalence invariance") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    LatticePolygon g = random_polygon(rng);

    CHECK(LatticePolygon::hull_of(lattice_points(g)) == g);

    // Pick: #lattice = area + boundary/2 + 1, doubled to stay integral.
    std::int64_t pts = static_cast<std::int64_t>(lattice_points(g).size());
    CHECK(2 * pts == doubled_area(g) + boundary_point_count(g) + 2);

    UnimodularAffineMap phi = random_unimodular(rng);
    LatticePolygon h = apply(phi, g);
    CHECK(doubled_area(h) == doubled_area(g));
    CHECK(boundary_point_count(h) == boundary_point_count(g));
    CHECK(interior_point_count(h) == interior_point_count(g));
    CHECK(is_minimal(h) == is_minimal(g));
    CHECK(is_standard_triangle(h) == is_standard_triangle(g));
    CHECK(is_thin_triangle(h) == is_thin_triangle(g));
  }
}

TEST_CASE("checked arithmetic reports overflow") {
  const std::int64_t big = std::int64_t{1} << 62;
  try {
    LatticePolygon g = poly({{big, 0}, {0, big}, {-big, -big}});
    (void)doubled_area(g);
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}
