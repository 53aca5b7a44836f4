#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kb {

/// Multiset of non-negative scores stored sorted in non-increasing order.
///
/// Construction validates every entry (finite, >= 0) and sorts once; all
/// derived vectors go through the same constructor, so the sorted
/// representation is an invariant. Index values depend only on the multiset:
/// trailing zeros and input order never matter.
class ScoreVector {
public:
    ScoreVector() = default;
    explicit ScoreVector(std::vector<double> entries);
    ScoreVector(std::initializer_list<double> entries);

    /// n copies of `value`.
    static ScoreVector uniform(std::size_t n, double value);

    const std::vector<double>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// 0-based access into the sorted representation.
    double operator[](std::size_t i) const { return entries_[i]; }

    /// Copy with `value` inserted in order.
    ScoreVector appended(double value) const;

    /// Copy with every entry multiplied by c; c must be strictly positive.
    ScoreVector scaled(double c) const;

    bool operator==(const ScoreVector&) const = default;

private:
    std::vector<double> entries_;
};

/// Positionwise sum of the sorted representations, the shorter side padded
/// with zeros.
ScoreVector operator+(const ScoreVector& a, const ScoreVector& b);

/// True when x is weakly dominated by y: x_i <= y_i at every position after
/// zero-padding the shorter vector.
bool dominates(const ScoreVector& x, const ScoreVector& y);

}  // namespace kb
