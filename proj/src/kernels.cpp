#include "kb/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace kb::kernels {

namespace {

double scalar_sum(const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += v[i];
    }
    return acc;
}

double scalar_sum_squares(const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += v[i] * v[i];
    }
    return acc;
}

double scalar_max_rect(const double* v, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double area = static_cast<double>(i + 1) * v[i];
        if (area > best) {
            best = area;
        }
    }
    return best;
}

const Ops kScalarOps = {"scalar", scalar_sum, scalar_sum_squares, scalar_max_rect};

const Ops& pick_active() {
    const Ops* chosen = avx2_ops() != nullptr ? avx2_ops() : &kScalarOps;
    if (const char* request = std::getenv("KB_KERNELS")) {
        if (std::strcmp(request, "scalar") == 0) {
            chosen = &kScalarOps;
        } else if (std::strcmp(request, "avx2") == 0 && avx2_ops() != nullptr) {
            chosen = avx2_ops();
        }
    }
    return *chosen;
}

}  // namespace

const Ops& scalar_ops() {
    return kScalarOps;
}

#if !defined(KB_WITH_AVX2)
const Ops* avx2_ops() {
    return nullptr;
}
#endif

const Ops& active_ops() {
    static const Ops& active = pick_active();
    return active;
}

}  // namespace kb::kernels
