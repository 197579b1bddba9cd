#pragma once

#include <compare>
#include <cstdint>

#include "latfam/checked.hpp"

namespace latfam::geom {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint sub(const LatticePoint& p, const LatticePoint& q) {
  return {sub_ck(p.x, q.x), sub_ck(p.y, q.y)};
}

inline LatticePoint add(const LatticePoint& p, const LatticePoint& q) {
  return {add_ck(p.x, q.x), add_ck(p.y, q.y)};
}

// Cross product of (a-o) and (b-o); positive means b is left of ray o->a.
inline std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return sub_ck(mul_ck(sub_ck(a.x, o.x), sub_ck(b.y, o.y)),
                mul_ck(sub_ck(a.y, o.y), sub_ck(b.x, o.x)));
}

inline std::int64_t det2(const LatticePoint& u, const LatticePoint& v) {
  return sub_ck(mul_ck(u.x, v.y), mul_ck(u.y, v.x));
}

// Affine map p -> A p + t with A in GL2(Z). Composition and inversion stay
// within the type; |det A| = 1 is checked on construction.
struct UnimodularAffineMap {
  std::int64_t a = 1, b = 0;
  std::int64_t c = 0, d = 1;
  std::int64_t tx = 0, ty = 0;

  static UnimodularAffineMap make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                  std::int64_t tx = 0, std::int64_t ty = 0) {
    UnimodularAffineMap m{a, b, c, d, tx, ty};
    std::int64_t det = m.det();
    if (det != 1 && det != -1) fail(Errc::Internal, "affine map is not unimodular");
    return m;
  }

  static UnimodularAffineMap identity() { return {}; }

  static UnimodularAffineMap translation(std::int64_t tx, std::int64_t ty) {
    return {1, 0, 0, 1, tx, ty};
  }

  std::int64_t det() const { return sub_ck(mul_ck(a, d), mul_ck(b, c)); }

  LatticePoint apply(const LatticePoint& p) const {
    return {add_ck(add_ck(mul_ck(a, p.x), mul_ck(b, p.y)), tx),
            add_ck(add_ck(mul_ck(c, p.x), mul_ck(d, p.y)), ty)};
  }

  // this ∘ other: apply `other` first, then this map.
  UnimodularAffineMap after(const UnimodularAffineMap& o) const {
    UnimodularAffineMap r;
    r.a = add_ck(mul_ck(a, o.a), mul_ck(b, o.c));
    r.b = add_ck(mul_ck(a, o.b), mul_ck(b, o.d));
    r.c = add_ck(mul_ck(c, o.a), mul_ck(d, o.c));
    r.d = add_ck(mul_ck(c, o.b), mul_ck(d, o.d));
    LatticePoint t = apply({o.tx, o.ty});
    r.tx = t.x;
    r.ty = t.y;
    return r;
  }

  UnimodularAffineMap inverse() const {
    std::int64_t s = det();  // +1 or -1, and 1/s == s
    UnimodularAffineMap r;
    r.a = mul_ck(s, d);
    r.b = mul_ck(s, neg_ck(b));
    r.c = mul_ck(s, neg_ck(c));
    r.d = mul_ck(s, a);
    // r maps p -> A^{-1}(p - t)
    std::int64_t ix = add_ck(mul_ck(r.a, tx), mul_ck(r.b, ty));
    std::int64_t iy = add_ck(mul_ck(r.c, tx), mul_ck(r.d, ty));
    r.tx = neg_ck(ix);
    r.ty = neg_ck(iy);
    return r;
  }

  friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;
};

}  // namespace latfam::geom
