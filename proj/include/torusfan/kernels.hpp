#pragma once

// Batched integer halfspace membership, the inner loop of lattice point
// enumeration. A scalar reference kernel plus SIMD variants (AVX2 on x86-64,
// NEON on AArch64) chosen at runtime; every variant must agree bit-for-bit
// with the scalar one.
//
// Overflow contract: for every row r and every tested point x,
//   |offsets[r]| + sum_j |normals[r][j]| * |x_j| <= INT32_MAX.
// Callers check this before dispatching and fall back to exact arithmetic.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace torusfan::kernels {

struct HalfspaceRows {
  const std::int32_t* normals = nullptr;  // rows x dim, row-major
  const std::int32_t* offsets = nullptr;  // rows
  std::size_t rows = 0;
  std::size_t dim = 0;
};

/// coords holds the points in structure-of-arrays layout: coordinate j of
/// point i is coords[j * stride + i]. On return mask[i] is 1 iff
/// <normals[r], x_i> >= offsets[r] for every row r.
using HalfspaceFilterFn = void (*)(const HalfspaceRows& rows, const std::int32_t* coords, std::size_t stride,
                                   std::size_t count, std::uint8_t* mask);

void halfspace_filter_scalar(const HalfspaceRows& rows, const std::int32_t* coords, std::size_t stride,
                             std::size_t count, std::uint8_t* mask);
void halfspace_filter_avx2(const HalfspaceRows& rows, const std::int32_t* coords, std::size_t stride,
                           std::size_t count, std::uint8_t* mask);
void halfspace_filter_neon(const HalfspaceRows& rows, const std::int32_t* coords, std::size_t stride,
                           std::size_t count, std::uint8_t* mask);

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);
HalfspaceFilterFn halfspace_filter(Isa isa);

/// Best available ISA; TORUSFAN_KERNEL=scalar|avx2|neon overrides when the
/// requested variant is available.
Isa selected_isa();

}  // namespace torusfan::kernels
