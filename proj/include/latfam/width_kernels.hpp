#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latfam/point.hpp"
#include "latfam/viewangle.hpp"

namespace latfam::width {

// Batch width evaluation: widths_out[i] = max_j(ms[i]*xs[j] + ns[i]*ys[j])
//                                       - min_j(ms[i]*xs[j] + ns[i]*ys[j]).
//
// Kernel contract (unchecked fast path): vert_count >= 1, every |m|,|n|,|x|,|y|
// fits in 32 bits and max|m|*max|x| + max|n|*max|y| < 2^62. batch_widths()
// verifies the contract before dispatching and otherwise falls back to
// overflow-checked scalar evaluation.
using WidthKernelFn = void (*)(const std::int64_t* xs, const std::int64_t* ys,
                               std::size_t vert_count, const std::int64_t* ms,
                               const std::int64_t* ns, std::size_t dir_count,
                               std::int64_t* widths_out);

void width_kernel_scalar(const std::int64_t* xs, const std::int64_t* ys, std::size_t vert_count,
                         const std::int64_t* ms, const std::int64_t* ns, std::size_t dir_count,
                         std::int64_t* widths_out);

#if defined(__x86_64__) || defined(_M_X64)
void width_kernel_avx2(const std::int64_t* xs, const std::int64_t* ys, std::size_t vert_count,
                       const std::int64_t* ms, const std::int64_t* ns, std::size_t dir_count,
                       std::int64_t* widths_out);
#endif

// True when an AVX2 kernel was compiled in and the CPU supports it.
bool avx2_kernel_available();

// Best kernel for this process. Honors LATFAM_KERNEL=scalar in the
// environment; force_scalar overrides unconditionally.
WidthKernelFn select_width_kernel(bool force_scalar = false);
const char* selected_width_kernel_name(bool force_scalar = false);

std::vector<std::int64_t> batch_widths(std::span<const geom::LatticePoint> verts,
                                       std::span<const Viewangle> dirs,
                                       bool force_scalar = false);

}  // namespace latfam::width
