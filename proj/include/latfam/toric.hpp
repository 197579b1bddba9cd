#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latfam/polygon.hpp"
#include "latfam/width.hpp"

namespace latfam::toric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Monomial map (s,t) -> (s^{a_0} t^{b_0} : ... : s^{a_r} t^{b_r}) given by its
// exponent pairs. Pairs must be distinct; most operations additionally need
// the affine span of the pairs to be 2-dimensional.
struct MonomialEmbedding {
  std::vector<std::pair<std::int64_t, std::int64_t>> exponents;
};

// Data of the fibration induced by a primitive direction h = (m,n):
// exponent vector e of the monomial map (prod x_i^{e_i} : 1) with
//   sum e_i = 0,  sum a_i e_i = -n,  sum b_i e_i = m,
// and the degree of the fibers, max_i(a_i m + b_i n) - min_i(a_i m + b_i n).
struct FibrationDescriptor {
  width::Viewangle h;
  std::vector<std::int64_t> e;
  std::int64_t degree = 0;

  friend bool operator==(const FibrationDescriptor&, const FibrationDescriptor&) = default;
};

// Projective tuple with exact entries, reduced to a primitive integer vector
// whose first nonzero coordinate is positive.
struct ProjectivePoint {
  std::vector<BigInt> coords;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

// Convex hull of the exponent pairs. Throws DegenerateEmbedding below dim 2.
geom::LatticePolygon polygon_of(const MonomialEmbedding& emb);

// Integer solution of the three-equation system above, chosen deterministically
// with small |e| (Hermite particular solution, kernel descent, lexicographic
// tie-break). Requires gcd(m,n) = 1 and exponent differences spanning all of
// Z^2 (otherwise the monomial map is a multiple cover and no integer solution
// exists; DegenerateEmbedding).
FibrationDescriptor fibration_exponents(const MonomialEmbedding& emb, const width::Viewangle& h);

// max_i(a_i m + b_i n) - min_i(a_i m + b_i n); equals the width of the
// exponent hull in direction h. h need not be primitive.
std::int64_t family_degree(const MonomialEmbedding& emb, const width::Viewangle& h);

// Evaluates u -> (k^{a_i} l^{b_i} u^{a_i m + b_i n})_i exactly at each sample.
// Every output satisfies prod x_i^{e_i} = l^m / k^n. k, l and all samples
// must be nonzero.
std::vector<ProjectivePoint> fiber_parametrization(const MonomialEmbedding& emb,
                                                   const width::Viewangle& h, const Rational& k,
                                                   const Rational& l,
                                                   std::span<const Rational> samples);

struct OptimalToricFamilies {
  std::int64_t v = 0;
  std::vector<FibrationDescriptor> descriptors;  // sorted by h
};

// Minimal family degree of the embedded toric surface and one fibration
// descriptor per optimal direction of the exponent hull.
OptimalToricFamilies optimal_toric_families(const MonomialEmbedding& emb);

// "(x1^2 x2 : x0^3)"-style rendering of an exponent vector.
std::string fibration_map_string(const std::vector<std::int64_t>& e);

// Exact rational power with integer (possibly negative) exponent.
Rational rational_pow(const Rational& base, std::int64_t exp);

}  // namespace latfam::toric
