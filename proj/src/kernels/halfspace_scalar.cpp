#include "torusfan/kernels.hpp"

namespace torusfan::kernels {

void halfspace_filter_scalar(const HalfspaceRows& rows, const std::int32_t* coords, std::size_t stride,
                             std::size_t count, std::uint8_t* mask) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint8_t ok = 1;
    for (std::size_t r = 0; r < rows.rows && ok; ++r) {
      const std::int32_t* a = rows.normals + r * rows.dim;
      std::int32_t acc = 0;
      for (std::size_t j = 0; j < rows.dim; ++j) acc += a[j] * coords[j * stride + i];
      ok = acc >= rows.offsets[r];
    }
    mask[i] = ok;
  }
}

}  // namespace torusfan::kernels
