#pragma once

#include <cstddef>

namespace kb::kernels {

/// Reduction kernels over a contiguous array of finite, non-negative doubles.
///
/// `max_rect` assumes the array is sorted in non-increasing order and returns
/// the largest-rectangle reduction max_i (i+1) * v[i] (0 for an empty array).
/// Each member has a portable scalar reference implementation and, on x86-64
/// hardware with AVX2, a vectorized variant selected at runtime.
struct Ops {
    const char* name;
    double (*sum)(const double* v, std::size_t n);
    double (*sum_squares)(const double* v, std::size_t n);
    double (*max_rect)(const double* v, std::size_t n);
};

/// Portable reference implementation.
const Ops& scalar_ops();

/// AVX2 implementation, or nullptr when the CPU (or the build) lacks AVX2.
const Ops* avx2_ops();

/// Implementation picked at startup: AVX2 when available, scalar otherwise.
/// The environment variable KB_KERNELS=scalar|avx2 overrides the choice;
/// an unavailable request falls back to scalar.
const Ops& active_ops();

}  // namespace kb::kernels
