#include "propus/kernels.hpp"

namespace propus::kernels {

namespace {

inline std::int32_t dot(const std::int8_t* x, const std::int8_t* y, std::size_t n) {
  std::int32_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::int32_t>(x[k]) * y[k];
  return acc;
}

}  // namespace

void product_transpose_serial(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                              std::size_t n, std::span<std::int32_t> out) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = dot(&a[i * n], &b[j * n], n);
}

void product_transpose_parallel(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                                std::size_t n, std::span<std::int32_t> out) {
  const auto rows = static_cast<std::int64_t>(n);
  const std::int8_t* pa = a.data();
  const std::int8_t* pb = b.data();
  std::int32_t* po = out.data();
  // Each thread owns whole output rows; no shared writes.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::int8_t* ai = pa + i * rows;
    std::int32_t* oi = po + i * rows;
    for (std::int64_t j = 0; j < rows; ++j) oi[j] = dot(ai, pb + j * rows, n);
  }
}

}  // namespace propus::kernels
