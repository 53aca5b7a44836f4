#include "kb/indices.hpp"

#include <cmath>

#include "kb/kernels.hpp"

namespace kb {

double euclidean_index(const ScoreVector& v) {
    const auto& e = v.entries();
    return std::sqrt(kernels::active_ops().sum_squares(e.data(), e.size()));
}

double rectangle_index(const ScoreVector& v) {
    const auto& e = v.entries();
    return kernels::active_ops().max_rect(e.data(), e.size());
}

std::size_t h_index(const ScoreVector& v) {
    std::size_t h = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= static_cast<double>(i + 1)) {
            h = i + 1;
        } else {
            break;
        }
    }
    return h;
}

double sum_index(const ScoreVector& v) {
    const auto& e = v.entries();
    return kernels::active_ops().sum(e.data(), e.size());
}

double evaluate(IndexKind kind, const ScoreVector& v) {
    switch (kind) {
        case IndexKind::Euclidean:
            return euclidean_index(v);
        case IndexKind::Rectangle:
            return rectangle_index(v);
        case IndexKind::HIndex:
            return static_cast<double>(h_index(v));
        case IndexKind::Sum:
            return sum_index(v);
    }
    return 0.0;
}

std::string_view index_name(IndexKind kind) {
    switch (kind) {
        case IndexKind::Euclidean:
            return "euclidean";
        case IndexKind::Rectangle:
            return "rectangle";
        case IndexKind::HIndex:
            return "hindex";
        case IndexKind::Sum:
            return "sum";
    }
    return "";
}

std::optional<IndexKind> parse_index(std::string_view name) {
    if (name == "euclidean") {
        return IndexKind::Euclidean;
    }
    if (name == "rectangle") {
        return IndexKind::Rectangle;
    }
    if (name == "hindex") {
        return IndexKind::HIndex;
    }
    if (name == "sum") {
        return IndexKind::Sum;
    }
    return std::nullopt;
}

}  // namespace kb
