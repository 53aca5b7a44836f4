#if defined(KB_WITH_AVX2)

#include <immintrin.h>

#include <cstddef>

#include "kb/kernels.hpp"

namespace kb::kernels {

namespace {

// Lanes are folded in the fixed order (l0 + l1) + (l2 + l3) so results do
// not depend on how the compiler would reassociate a horizontal add.
double fold_sum(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double fold_max(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double best = lane[0];
    for (int i = 1; i < 4; ++i) {
        if (lane[i] > best) {
            best = lane[i];
        }
    }
    return best;
}

double avx2_sum(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
    }
    double total = fold_sum(acc);
    for (; i < n; ++i) {
        total += v[i];
    }
    return total;
}

double avx2_sum_squares(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(v + i);
        // mul then add (no FMA) keeps each lane bit-identical to the scalar
        // loop, which rounds the square before accumulating.
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
    }
    double total = fold_sum(acc);
    for (; i < n; ++i) {
        total += v[i] * v[i];
    }
    return total;
}

double avx2_max_rect(const double* v, std::size_t n) {
    __m256d best = _mm256_setzero_pd();
    __m256d idx = _mm256_set_pd(4.0, 3.0, 2.0, 1.0);
    const __m256d four = _mm256_set1_pd(4.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d area = _mm256_mul_pd(idx, _mm256_loadu_pd(v + i));
        best = _mm256_max_pd(best, area);
        idx = _mm256_add_pd(idx, four);
    }
    double top = fold_max(best);
    for (; i < n; ++i) {
        const double area = static_cast<double>(i + 1) * v[i];
        if (area > top) {
            top = area;
        }
    }
    return top < 0.0 ? 0.0 : top;
}

const Ops kAvx2Ops = {"avx2", avx2_sum, avx2_sum_squares, avx2_max_rect};

bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") != 0;
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops* ops = cpu_has_avx2() ? &kAvx2Ops : nullptr;
    return ops;
}

}  // namespace kb::kernels

#endif  // KB_WITH_AVX2
