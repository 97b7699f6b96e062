#pragma once

#include <cstddef>
#include <cstring>

#include "bcsnet/common.hpp"

// Low-level numeric kernels shared by every matrix product in the library.
//
// All dot-product style reductions funnel through kernel_dot below, which is
// compiled exactly once (noinline) and sums its inputs in a fixed order. Any
// two code paths that multiply the same row by the same vector therefore
// produce bit-identical doubles, whether the caller processes one vector or
// a batch, on one thread or several. This property is load-bearing: the
// sensing/reconstruction split is required to reproduce the monolithic
// forward pass exactly.

namespace bcsnet::detail {

#if defined(__GNUC__) || defined(__clang__)
#define BCSNET_VECTOR_EXT 1
#if defined(__AVX512F__)
#define BCSNET_VEC_BYTES 64
#else
#define BCSNET_VEC_BYTES 32
#endif
typedef double vreal __attribute__((vector_size(BCSNET_VEC_BYTES)));
inline constexpr std::size_t vec_lanes = BCSNET_VEC_BYTES / sizeof(double);

inline vreal vload(const double* p) {
  vreal v;
  std::memcpy(&v, p, sizeof(v));
  return v;
}

inline double vsum(vreal v) {
  // Fixed pairwise reduction; the order is part of the numeric contract.
  double s01 = v[0] + v[1];
  double s23 = v[2] + v[3];
#if BCSNET_VEC_BYTES == 64
  double s45 = v[4] + v[5];
  double s67 = v[6] + v[7];
  return (s01 + s23) + (s45 + s67);
#else
  return s01 + s23;
#endif
}

__attribute__((noinline)) inline double kernel_dot(const double* a, const double* b,
                                                   std::size_t n) noexcept {
  vreal acc0{}, acc1{}, acc2{}, acc3{};
  std::size_t k = 0;
  for (; k + 4 * vec_lanes <= n; k += 4 * vec_lanes) {
    acc0 += vload(a + k) * vload(b + k);
    acc1 += vload(a + k + vec_lanes) * vload(b + k + vec_lanes);
    acc2 += vload(a + k + 2 * vec_lanes) * vload(b + k + 2 * vec_lanes);
    acc3 += vload(a + k + 3 * vec_lanes) * vload(b + k + 3 * vec_lanes);
  }
  vreal acc = (acc0 + acc1) + (acc2 + acc3);
  for (; k + vec_lanes <= n; k += vec_lanes) acc += vload(a + k) * vload(b + k);
  double s = vsum(acc);
  for (; k < n; ++k) s += a[k] * b[k];
  return s;
}

#else  // portable fallback, same four-chain structure

inline double kernel_dot(const double* a, const double* b, std::size_t n) noexcept {
  double acc0 = 0, acc1 = 0, acc2 = 0, acc3 = 0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    acc0 += a[k] * b[k];
    acc1 += a[k + 1] * b[k + 1];
    acc2 += a[k + 2] * b[k + 2];
    acc3 += a[k + 3] * b[k + 3];
  }
  double s = (acc0 + acc1) + (acc2 + acc3);
  for (; k < n; ++k) s += a[k] * b[k];
  return s;
}

#endif

/// y[j] += c * x[j]. Element-wise, so safe for the compiler to vectorize
/// without changing results.
inline void kernel_axpy(double* y, const double* x, double c, std::size_t n) noexcept {
  for (std::size_t j = 0; j < n; ++j) y[j] += c * x[j];
}

}  // namespace bcsnet::detail
