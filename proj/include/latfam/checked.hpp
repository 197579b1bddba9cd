#pragma once

#include <cstdint>
#include <cstdlib>

#include "latfam/errors.hpp"

namespace latfam {

// Overflow-checked int64 arithmetic. Every value-producing path in the
// geometry and lattice-algebra code goes through these. Wraparound is never
// silently accepted; out-of-range results raise Errc::Overflow.

inline std::int64_t add_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "integer addition overflow");
  return r;
}

inline std::int64_t sub_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::Overflow, "integer subtraction overflow");
  return r;
}

inline std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "integer multiplication overflow");
  return r;
}

inline std::int64_t neg_ck(std::int64_t a) { return sub_ck(0, a); }

inline std::int64_t abs_ck(std::int64_t a) { return a < 0 ? neg_ck(a) : a; }

// Floor division, exact for all sign combinations. b must be nonzero.
inline std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  if (b == 0) fail(Errc::Internal, "division by zero");
  if (a == INT64_MIN && b == -1) fail(Errc::Overflow, "integer division overflow");
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceildiv(std::int64_t a, std::int64_t b) {
  if (b == 0) fail(Errc::Internal, "division by zero");
  if (a == INT64_MIN && b == -1) fail(Errc::Overflow, "integer division overflow");
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = abs_ck(a);
  b = abs_ck(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// g = gcd(a,b) >= 0 together with x,y such that a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, cur_x = 0;
  std::int64_t old_y = 0, cur_y = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t;
    t = sub_ck(old_r, mul_ck(q, r)); old_r = r; r = t;
    t = sub_ck(old_x, mul_ck(q, cur_x)); old_x = cur_x; cur_x = t;
    t = sub_ck(old_y, mul_ck(q, cur_y)); old_y = cur_y; cur_y = t;
  }
  if (old_r < 0) { old_r = neg_ck(old_r); old_x = neg_ck(old_x); old_y = neg_ck(old_y); }
  x = old_x;
  y = old_y;
  return old_r;
}

}  // namespace latfam
