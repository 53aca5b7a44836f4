#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "kb/kernels.hpp"

using kb::kernels::Ops;

namespace {

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> values(n);
    for (double& v : values) {
        v = static_cast<double>(rng() % 10000) / 16.0;
    }
    return values;
}

}  // namespace

TEST_CASE("scalar kernels compute the three reductions") {
    const Ops& ops = kb::kernels::scalar_ops();
    const std::vector<double> v = {5, 3, 2};
    CHECK(ops.sum(v.data(), v.size()) == 10.0);
    CHECK(ops.sum_squares(v.data(), v.size()) == 38.0);
    CHECK(ops.max_rect(v.data(), v.size()) == 6.0);
    CHECK(ops.sum(nullptr, 0) == 0.0);
    CHECK(ops.sum_squares(nullptr, 0) == 0.0);
    CHECK(ops.max_rect(nullptr, 0) == 0.0);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const Ops* avx2 = kb::kernels::avx2_ops();
    if (avx2 == nullptr) {
        MESSAGE("AVX2 unavailable on this machine; skipping equivalence checks");
        return;
    }
    const Ops& scalar = kb::kernels::scalar_ops();
    std::mt19937_64 rng(7);
    for (std::size_t n = 0; n <= 67; ++n) {
        std::vector<double> values = random_values(rng, n);
        {
            const double a = scalar.sum(values.data(), n);
            const double b = avx2->sum(values.data(), n);
            CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
        }
        {
            const double a = scalar.sum_squares(values.data(), n);
            const double b = avx2->sum_squares(values.data(), n);
            CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
        }
        {
            // max_rect takes a descending-sorted array; the lanewise products
            // match the scalar ones exactly, so the max is bit-identical.
            std::sort(values.begin(), values.end(), std::greater<>());
            const double a = scalar.max_rect(values.data(), n);
            const double b = avx2->max_rect(values.data(), n);
            CHECK(a == b);
        }
    }
}

TEST_CASE("active ops is one of the two implementations") {
    const Ops& active = kb::kernels::active_ops();
    const bool is_scalar = &active == &kb::kernels::scalar_ops();
    const bool is_avx2 = kb::kernels::avx2_ops() != nullptr && &active == kb::kernels::avx2_ops();
    CHECK((is_scalar || is_avx2));
    const std::vector<double> v = {4, 1};
    CHECK(active.sum(v.data(), v.size()) == 5.0);
}
