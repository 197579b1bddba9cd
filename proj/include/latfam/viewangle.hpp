#pragma once

#include <compare>
#include <cstdint>

#include "latfam/checked.hpp"

namespace latfam::width {

// Primitive-or-not covector (m,n) in the dual lattice. Since a direction and
// its negative have equal width, reported sets use the sign-canonical form
// m > 0, or m == 0 and n > 0.
struct Viewangle {
  std::int64_t m = 0;
  std::int64_t n = 0;

  bool is_zero() const { return m == 0 && n == 0; }

  bool is_canonical() const { return m > 0 || (m == 0 && n > 0); }

  Viewangle canonical() const {
    if (is_zero()) fail(Errc::Internal, "zero viewangle has no canonical form");
    if (is_canonical()) return *this;
    return {neg_ck(m), neg_ck(n)};
  }

  bool is_primitive() const { return gcd64(m, n) == 1; }

  friend auto operator<=>(const Viewangle&, const Viewangle&) = default;
};

}  // namespace latfam::width
