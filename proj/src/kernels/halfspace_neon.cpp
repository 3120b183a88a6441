#include "torusfan/kernels.hpp"

#include <stdexcept>

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>
#define TORUSFAN_HAVE_NEON_KERNEL 1
#endif

namespace torusfan::kernels {

#ifdef TORUSFAN_HAVE_NEON_KERNEL

void halfspace_filter_neon(const HalfspaceRows& rows, const std::int32_t* coords, std::size_t stride,
                           std::size_t count, std::uint8_t* mask) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    uint32x4_t ok = vdupq_n_u32(0xffffffffu);
    for (std::size_t r = 0; r < rows.rows; ++r) {
      const std::int32_t* a = rows.normals + r * rows.dim;
      int32x4_t acc = vdupq_n_s32(0);
      for (std::size_t j = 0; j < rows.dim; ++j) {
        if (a[j] == 0) continue;
        acc = vmlaq_s32(acc, vld1q_s32(coords + j * stride + i), vdupq_n_s32(a[j]));
      }
      ok = vandq_u32(ok, vcgeq_s32(acc, vdupq_n_s32(rows.offsets[r])));
    }
    mask[i + 0] = vgetq_lane_u32(ok, 0) ? 1 : 0;
    mask[i + 1] = vgetq_lane_u32(ok, 1) ? 1 : 0;
    mask[i + 2] = vgetq_lane_u32(ok, 2) ? 1 : 0;
    mask[i + 3] = vgetq_lane_u32(ok, 3) ? 1 : 0;
  }
  if (i < count) halfspace_filter_scalar(rows, coords + i, stride, count - i, mask + i);
}

#else

void halfspace_filter_neon(const HalfspaceRows&, const std::int32_t*, std::size_t, std::size_t, std::uint8_t*) {
  throw std::logic_error("NEON kernel not compiled for this target");
}

#endif

}  // namespace torusfan::kernels
