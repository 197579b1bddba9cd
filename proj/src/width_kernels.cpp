#include "latfam/width_kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace latfam::width {

void width_kernel_scalar(const std::int64_t* xs, const std::int64_t* ys, std::size_t vert_count,
                         const std::int64_t* ms, const std::int64_t* ns, std::size_t dir_count,
                         std::int64_t* widths_out) {
  for (std::size_t i = 0; i < dir_count; ++i) {
    const std::int64_t m = ms[i];
    const std::int64_t n = ns[i];
    std::int64_t hi = m * xs[0] + n * ys[0];
    std::int64_t lo = hi;
    for (std::size_t j = 1; j < vert_count; ++j) {
      std::int64_t v = m * xs[j] + n * ys[j];
      hi = v > hi ? v : hi;
      lo = v < lo ? v : lo;
    }
    widths_out[i] = hi - lo;
  }
}

namespace {

bool env_forces_scalar() {
  static const bool forced = [] {
    const char* v = std::getenv("LATFAM_KERNEL");
    return v != nullptr && std::strcmp(v, "scalar") == 0;
  }();
  return forced;
}

}  // namespace

bool avx2_kernel_available() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

WidthKernelFn select_width_kernel(bool force_scalar) {
  if (force_scalar || env_forces_scalar()) return width_kernel_scalar;
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_kernel_available()) return width_kernel_avx2;
#endif
  return width_kernel_scalar;
}

const char* selected_width_kernel_name(bool force_scalar) {
  if (force_scalar || env_forces_scalar()) return "scalar";
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_kernel_available()) return "avx2";
#endif
  return "scalar";
}

std::vector<std::int64_t> batch_widths(std::span<const geom::LatticePoint> verts,
                                       std::span<const Viewangle> dirs, bool force_scalar) {
  if (verts.empty()) fail(Errc::EmptyInput, "batch_widths needs at least one vertex");
  std::vector<std::int64_t> out(dirs.size());
  if (dirs.empty()) return out;

  std::vector<std::int64_t> xs(verts.size()), ys(verts.size());
  std::int64_t max_coord = 0;
  for (std::size_t j = 0; j < verts.size(); ++j) {
    xs[j] = verts[j].x;
    ys[j] = verts[j].y;
    max_coord = std::max({max_coord, abs_ck(verts[j].x), abs_ck(verts[j].y)});
  }
  std::vector<std::int64_t> ms(dirs.size()), ns(dirs.size());
  std::int64_t max_dir = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    ms[i] = dirs[i].m;
    ns[i] = dirs[i].n;
    max_dir = std::max({max_dir, abs_ck(dirs[i].m), abs_ck(dirs[i].n)});
  }

  const std::int64_t limit32 = (std::int64_t{1} << 31) - 1;
  const __int128 budget = __int128{1} << 62;
  const bool fast_ok = max_coord <= limit32 && max_dir <= limit32 &&
                       2 * (__int128)max_dir * (__int128)max_coord < budget;

  if (fast_ok) {
    select_width_kernel(force_scalar)(xs.data(), ys.data(), xs.size(), ms.data(), ns.data(),
                                      ms.size(), out.data());
    return out;
  }

  // Magnitudes exceed the kernel contract: evaluate with checked arithmetic.
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    std::int64_t hi = add_ck(mul_ck(ms[i], xs[0]), mul_ck(ns[i], ys[0]));
    std::int64_t lo = hi;
    for (std::size_t j = 1; j < xs.size(); ++j) {
      std::int64_t v = add_ck(mul_ck(ms[i], xs[j]), mul_ck(ns[i], ys[j]));
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
    out[i] = sub_ck(hi, lo);
  }
  return out;
}

}  // namespace latfam::width
