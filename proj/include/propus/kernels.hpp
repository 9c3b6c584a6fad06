#pragma once

// Dense product kernels behind gram() and multiply(). The serial versions
// are the reference the OpenMP versions are tested and benchmarked against.

#include <cstddef>
#include <cstdint>
#include <span>

namespace propus::kernels {

// out[i*n + j] = sum_k a[i*n + k] * b[j*n + k]  (a * b^T, both n x n).
void product_transpose_serial(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                              std::size_t n, std::span<std::int32_t> out);

void product_transpose_parallel(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                                std::size_t n, std::span<std::int32_t> out);

// Orders at or above this use the parallel kernel.
inline constexpr std::size_t kParallelThreshold = 96;

}  // namespace propus::kernels
