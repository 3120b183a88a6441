#include "torusfan/kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TORUSFAN_HAVE_AVX2_KERNEL 1
#endif

namespace torusfan::kernels {

#ifdef TORUSFAN_HAVE_AVX2_KERNEL

__attribute__((target("avx2"))) void halfspace_filter_avx2(const HalfspaceRows& rows,
                                                            const std::int32_t* coords, std::size_t stride,
                                                            std::size_t count, std::uint8_t* mask) {
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i ok = _mm256_set1_epi32(-1);
    for (std::size_t r = 0; r < rows.rows; ++r) {
      const std::int32_t* a = rows.normals + r * rows.dim;
      __m256i acc = _mm256_setzero_si256();
      for (std::size_t j = 0; j < rows.dim; ++j) {
        if (a[j] == 0) continue;
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(coords + j * stride + i));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(_mm256_set1_epi32(a[j]), x));
      }
      // acc >= b  <=>  !(b > acc)
      const __m256i below = _mm256_cmpgt_epi32(_mm256_set1_epi32(rows.offsets[r]), acc);
      ok = _mm256_andnot_si256(below, ok);
    }
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(ok));
    for (int k = 0; k < 8; ++k) mask[i + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((bits >> k) & 1);
  }
  if (i < count) {
    HalfspaceRows tail = rows;
    halfspace_filter_scalar(tail, coords + i, stride, count - i, mask + i);
  }
}

#else

void halfspace_filter_avx2(const HalfspaceRows&, const std::int32_t*, std::size_t, std::size_t, std::uint8_t*) {
  throw std::logic_error("AVX2 kernel not compiled for this target");
}

#endif

}  // namespace torusfan::kernels
