#include "kb/score_vector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "kb/errors.hpp"

namespace kb {

namespace {

void validate_entry(double v) {
    if (!std::isfinite(v)) {
        throw NonFiniteError("score entries must be finite");
    }
    if (v < 0.0) {
        throw NegativeScoreError("score entries must be non-negative");
    }
}

}  // namespace

ScoreVector::ScoreVector(std::vector<double> entries) : entries_(std::move(entries)) {
    for (double v : entries_) {
        validate_entry(v);
    }
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

ScoreVector::ScoreVector(std::initializer_list<double> entries)
    : ScoreVector(std::vector<double>(entries)) {}

ScoreVector ScoreVector::uniform(std::size_t n, double value) {
    validate_entry(value);
    return ScoreVector(std::vector<double>(n, value));
}

ScoreVector ScoreVector::appended(double value) const {
    std::vector<double> out = entries_;
    out.push_back(value);
    return ScoreVector(std::move(out));
}

ScoreVector ScoreVector::scaled(double c) const {
    if (!std::isfinite(c) || c <= 0.0) {
        throw NonPositiveScaleError("scale factor must be a positive finite number");
    }
    std::vector<double> out = entries_;
    for (double& v : out) {
        v *= c;
    }
    return ScoreVector(std::move(out));
}

ScoreVector operator+(const ScoreVector& a, const ScoreVector& b) {
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    std::vector<double> out = longer.entries();
    for (std::size_t i = 0; i < shorter.size(); ++i) {
        out[i] += shorter[i];
    }
    return ScoreVector(std::move(out));
}

bool dominates(const ScoreVector& x, const ScoreVector& y) {
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = i < x.size() ? x[i] : 0.0;
        const double yi = i < y.size() ? y[i] : 0.0;
        if (xi > yi) {
            return false;
        }
    }
    return true;
}

}  // namespace kb
