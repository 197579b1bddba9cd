// AVX2 variant of the batch width kernel. Compiled with -mavx2 in its own
// translation unit; callers reach it only through select_width_kernel(),
// which checks CPU support first.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "latfam/width_kernels.hpp"

namespace latfam::width {

namespace {

// Lane-wise max/min for 4x int64 (no native epi64 min/max in AVX2).
inline __m256i max_epi64(__m256i a, __m256i b) {
  __m256i gt = _mm256_cmpgt_epi64(a, b);
  return _mm256_blendv_epi8(b, a, gt);
}

inline __m256i min_epi64(__m256i a, __m256i b) {
  __m256i gt = _mm256_cmpgt_epi64(a, b);
  return _mm256_blendv_epi8(a, b, gt);
}

}  // namespace

void width_kernel_avx2(const std::int64_t* xs, const std::int64_t* ys, std::size_t vert_count,
                       const std::int64_t* ms, const std::int64_t* ns, std::size_t dir_count,
                       std::int64_t* widths_out) {
  std::size_t i = 0;
  for (; i + 4 <= dir_count; i += 4) {
    // Kernel contract keeps every operand within 32 bits, so the signed
    // 32x32->64 multiply reads the full value from the low lane half.
    __m256i mv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ms + i));
    __m256i nv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ns + i));

    __m256i xv = _mm256_set1_epi64x(xs[0]);
    __m256i yv = _mm256_set1_epi64x(ys[0]);
    __m256i acc = _mm256_add_epi64(_mm256_mul_epi32(mv, xv), _mm256_mul_epi32(nv, yv));
    __m256i hi = acc;
    __m256i lo = acc;
    for (std::size_t j = 1; j < vert_count; ++j) {
      xv = _mm256_set1_epi64x(xs[j]);
      yv = _mm256_set1_epi64x(ys[j]);
      acc = _mm256_add_epi64(_mm256_mul_epi32(mv, xv), _mm256_mul_epi32(nv, yv));
      hi = max_epi64(hi, acc);
      lo = min_epi64(lo, acc);
    }
    __m256i w = _mm256_sub_epi64(hi, lo);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(widths_out + i), w);
  }
  if (i < dir_count)
    width_kernel_scalar(xs, ys, vert_count, ms + i, ns + i, dir_count - i, widths_out + i);
}

}  // namespace latfam::width

#endif  // x86_64
