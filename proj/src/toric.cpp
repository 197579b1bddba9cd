#include "latfam/toric.hpp"

#include <algorithm>
#include <set>

namespace latfam::toric {

using geom::LatticePoint;
using width::Viewangle;

namespace {

void validate_embedding(const MonomialEmbedding& emb) {
  if (emb.exponents.empty()) fail(Errc::EmptyInput, "embedding has no exponent pairs");
  std::set<std::pair<std::int64_t, std::int64_t>> seen(emb.exponents.begin(), emb.exponents.end());
  if (seen.size() != emb.exponents.size())
    fail(Errc::DegenerateEmbedding, "exponent pairs are not pairwise distinct");
}

std::vector<LatticePoint> exponent_points(const MonomialEmbedding& emb) {
  std::vector<LatticePoint> pts;
  pts.reserve(emb.exponents.size());
  for (const auto& [a, b] : emb.exponents) pts.push_back({a, b});
  return pts;
}

// ---- integer column Hermite reduction --------------------------------------
//
// M is 3 x c (rows: all ones, a_i, b_i). Column operations tracked in U give
// M·U = H with pivots on the diagonal of the first three columns; kernel
// lattice = columns 3..c-1 of U. Rank < 3 means the exponent pairs are
// affinely dependent.

struct Hnf {
  std::vector<std::vector<std::int64_t>> h;  // 3 x c
  std::vector<std::vector<std::int64_t>> u;  // c x c
};

Hnf column_hnf(const MonomialEmbedding& emb) {
  const std::size_t c = emb.exponents.size();
  Hnf r;
  r.h.assign(3, std::vector<std::int64_t>(c, 0));
  for (std::size_t j = 0; j < c; ++j) {
    r.h[0][j] = 1;
    r.h[1][j] = emb.exponents[j].first;
    r.h[2][j] = emb.exponents[j].second;
  }
  r.u.assign(c, std::vector<std::int64_t>(c, 0));
  for (std::size_t j = 0; j < c; ++j) r.u[j][j] = 1;

  auto swap_cols = [&](std::size_t p, std::size_t q) {
    for (auto& row : r.h) std::swap(row[p], row[q]);
    for (auto& row : r.u) std::swap(row[p], row[q]);
  };
  auto negate_col = [&](std::size_t p) {
    for (auto& row : r.h) row[p] = neg_ck(row[p]);
    for (auto& row : r.u) row[p] = neg_ck(row[p]);
  };
  auto axpy_col = [&](std::size_t dst, std::int64_t f, std::size_t src) {
    // col_dst -= f * col_src
    for (auto& row : r.h) row[dst] = sub_ck(row[dst], mul_ck(f, row[src]));
    for (auto& row : r.u) row[dst] = sub_ck(row[dst], mul_ck(f, row[src]));
  };

  for (std::size_t p = 0; p < 3; ++p) {
    if (p >= c) fail(Errc::DegenerateEmbedding, "affine span of the exponents is below dim 2");
    while (true) {
      std::size_t pivot = c;
      for (std::size_t j = p; j < c; ++j)
        if (r.h[p][j] != 0 && (pivot == c || abs_ck(r.h[p][j]) < abs_ck(r.h[p][pivot]))) pivot = j;
      if (pivot == c) fail(Errc::DegenerateEmbedding, "affine span of the exponents is below dim 2");
      if (pivot != p) swap_cols(p, pivot);
      if (r.h[p][p] < 0) negate_col(p);
      bool done = true;
      for (std::size_t j = p + 1; j < c; ++j) {
        if (r.h[p][j] == 0) continue;
        std::int64_t f = floordiv(r.h[p][j], r.h[p][p]);
        if (f != 0) axpy_col(j, f, p);
        if (r.h[p][j] != 0) done = false;
      }
      if (done) break;
    }
  }
  return r;
}

std::int64_t l1_norm(const std::vector<std::int64_t>& e) {
  std::int64_t s = 0;
  for (std::int64_t v : e) s = add_ck(s, abs_ck(v));
  return s;
}

std::int64_t l1_shifted(const std::vector<std::int64_t>& e, const std::vector<std::int64_t>& w,
                        std::int64_t c) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s = add_ck(s, abs_ck(add_ck(e[i], mul_ck(c, w[i]))));
  return s;
}

// Leftmost integer minimizer of the convex function c -> |e + c w|_1.
std::int64_t best_step(const std::vector<std::int64_t>& e, const std::vector<std::int64_t>& w) {
  std::int64_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (w[i] == 0) continue;
    std::int64_t b = floordiv(neg_ck(e[i]), w[i]);
    lo = std::min(lo, sub_ck(b, 1));
    hi = std::max(hi, add_ck(b, 1));
  }
  // Smallest c with f(c+1) - f(c) >= 0; f is convex so the difference is
  // nondecreasing in c.
  while (lo < hi) {
    std::int64_t mid = lo + floordiv(sub_ck(hi, lo), 2);
    if (l1_shifted(e, w, add_ck(mid, 1)) >= l1_shifted(e, w, mid))
      hi = mid;
    else
      lo = add_ck(mid, 1);
  }
  return lo;
}

void add_multiple(std::vector<std::int64_t>& e, const std::vector<std::int64_t>& w,
                  std::int64_t c) {
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = add_ck(e[i], mul_ck(c, w[i]));
}

// Reduce |e|_1 over the kernel lattice by coordinate descent, then walk to the
// lexicographically smallest vector of that norm reachable by single steps.
void minimize_l1(std::vector<std::int64_t>& e,
                 const std::vector<std::vector<std::int64_t>>& kernel) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& w : kernel) {
      std::int64_t c = best_step(e, w);
      if (c != 0 && l1_shifted(e, w, c) < l1_norm(e)) {
        add_multiple(e, w, c);
        improved = true;
      }
    }
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& w : kernel) {
      for (std::int64_t c : {std::int64_t{-1}, std::int64_t{1}}) {
        if (l1_shifted(e, w, c) != l1_norm(e)) continue;
        std::vector<std::int64_t> cand = e;
        add_multiple(cand, w, c);
        if (cand < e) {
          e = std::move(cand);
          moved = true;
        }
      }
    }
  }
}

}  // namespace

geom::LatticePolygon polygon_of(const MonomialEmbedding& emb) {
  validate_embedding(emb);
  geom::LatticePolygon g = geom::convex_hull(exponent_points(emb));
  if (g.dim() < 2) fail(Errc::DegenerateEmbedding, "exponent pairs span less than dim 2");
  return g;
}

std::int64_t family_degree(const MonomialEmbedding& emb, const Viewangle& h) {
  validate_embedding(emb);
  if (h.is_zero()) fail(Errc::Internal, "family degree of the zero direction");
  std::int64_t hi = 0, lo = 0;
  bool first = true;
  for (const auto& [a, b] : emb.exponents) {
    std::int64_t v = add_ck(mul_ck(a, h.m), mul_ck(b, h.n));
    if (first) {
      hi = lo = v;
      first = false;
    } else {
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
  }
  return sub_ck(hi, lo);
}

FibrationDescriptor fibration_exponents(const MonomialEmbedding& emb, const Viewangle& h) {
  validate_embedding(emb);
  if (!h.is_primitive())
    fail(Errc::NonPrimitiveDirection, "fibration direction must have gcd(m,n) = 1");

  Hnf hnf = column_hnf(emb);
  const std::size_t c = emb.exponents.size();
  const std::int64_t target[3] = {0, neg_ck(h.n), h.m};

  // Forward-solve H y = target; each divisibility failure means the target
  // lies outside the column lattice, i.e. the exponent differences span a
  // proper sublattice of Z^2 and the monomial map is a multiple cover.
  std::int64_t y[3] = {0, 0, 0};
  for (std::size_t p = 0; p < 3; ++p) {
    std::int64_t rhs = target[p];
    for (std::size_t q = 0; q < p; ++q) rhs = sub_ck(rhs, mul_ck(hnf.h[p][q], y[q]));
    if (rhs % hnf.h[p][p] != 0)
      fail(Errc::DegenerateEmbedding,
           "exponent differences span a proper sublattice; the monomial map is not birational");
    y[p] = rhs / hnf.h[p][p];
  }

  std::vector<std::int64_t> e(c, 0);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t p = 0; p < 3; ++p) e[i] = add_ck(e[i], mul_ck(y[p], hnf.u[i][p]));

  std::vector<std::vector<std::int64_t>> kernel;
  for (std::size_t j = 3; j < c; ++j) {
    std::vector<std::int64_t> w(c);
    for (std::size_t i = 0; i < c; ++i) w[i] = hnf.u[i][j];
    kernel.push_back(std::move(w));
  }
  minimize_l1(e, kernel);

  FibrationDescriptor d;
  d.h = h;
  d.e = std::move(e);
  d.degree = family_degree(emb, h);

  // The three defining identities plus the composite one, verified exactly.
  std::int64_t se = 0, sae = 0, sbe = 0, sfe = 0;
  for (std::size_t i = 0; i < c; ++i) {
    const auto& [a, b] = emb.exponents[i];
    se = add_ck(se, d.e[i]);
    sae = add_ck(sae, mul_ck(a, d.e[i]));
    sbe = add_ck(sbe, mul_ck(b, d.e[i]));
    std::int64_t f = add_ck(mul_ck(a, h.m), mul_ck(b, h.n));
    sfe = add_ck(sfe, mul_ck(d.e[i], f));
  }
  if (se != 0 || sae != neg_ck(h.n) || sbe != h.m || sfe != 0)
    fail(Errc::Internal, "fibration exponent identities failed verification");
  return d;
}

Rational rational_pow(const Rational& base, std::int64_t exp) {
  if (exp == 0) return Rational(1);
  bool inv = exp < 0;
  std::int64_t k = inv ? neg_ck(exp) : exp;
  Rational acc(1), sq = base;
  while (k > 0) {
    if (k & 1) acc *= sq;
    sq *= sq;
    k >>= 1;
  }
  if (inv) {
    if (acc == 0) fail(Errc::Internal, "inverting zero");
    acc = Rational(1) / acc;
  }
  return acc;
}

std::vector<ProjectivePoint> fiber_parametrization(const MonomialEmbedding& emb,
                                                   const Viewangle& h, const Rational& k,
                                                   const Rational& l,
                                                   std::span<const Rational> samples) {
  if (k == 0 || l == 0) fail(Errc::ZeroScale, "fiber scales k, l must be nonzero");
  FibrationDescriptor d = fibration_exponents(emb, h);

  const Rational relation = rational_pow(l, h.m) / rational_pow(k, h.n);

  std::vector<ProjectivePoint> out;
  out.reserve(samples.size());
  for (const Rational& u : samples) {
    if (u == 0) fail(Errc::ZeroSample, "fiber parameter samples must be nonzero");
    std::vector<Rational> coords;
    coords.reserve(emb.exponents.size());
    for (const auto& [a, b] : emb.exponents) {
      std::int64_t fiber_exp = add_ck(mul_ck(a, h.m), mul_ck(b, h.n));
      coords.push_back(rational_pow(k, a) * rational_pow(l, b) * rational_pow(u, fiber_exp));
    }

    // Clear denominators and divide by the content; projective scaling leaves
    // prod x_i^{e_i} unchanged because sum e_i = 0.
    BigInt den_lcm = 1;
    for (const Rational& q : coords) den_lcm = lcm(den_lcm, denominator(q));
    ProjectivePoint p;
    p.coords.reserve(coords.size());
    BigInt content = 0;
    for (const Rational& q : coords) {
      BigInt z = numerator(q) * (den_lcm / denominator(q));
      content = gcd(content, z);
      p.coords.push_back(std::move(z));
    }
    for (BigInt& z : p.coords) z /= content;
    for (const BigInt& z : p.coords) {
      if (z == 0) continue;
      if (z < 0)
        for (BigInt& w : p.coords) w = -w;
      break;
    }

    Rational check(1);
    for (std::size_t i = 0; i < p.coords.size(); ++i)
      check *= rational_pow(Rational(p.coords[i]), d.e[i]);
    if (check != relation)
      fail(Errc::Internal, "fiber point violates the monomial relation");
    out.push_back(std::move(p));
  }
  return out;
}

OptimalToricFamilies optimal_toric_families(const MonomialEmbedding& emb) {
  geom::LatticePolygon g = polygon_of(emb);
  width::WidthReport rep = width::solve(g);
  OptimalToricFamilies out;
  out.v = rep.width;
  for (const Viewangle& h : rep.optimal) out.descriptors.push_back(fibration_exponents(emb, h));
  return out;
}

std::string fibration_map_string(const std::vector<std::int64_t>& e) {
  auto side = [&](bool positive) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::int64_t p = positive ? e[i] : neg_ck(e[i]);
      if (p <= 0) continue;
      if (!s.empty()) s += " ";
      s += "x" + std::to_string(i);
      if (p > 1) s += "^" + std::to_string(p);
    }
    return s.empty() ? std::string("1") : s;
  };
  return "(" + side(true) + " : " + side(false) + ")";
}

}  // namespace latfam::toric
