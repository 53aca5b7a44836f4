#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "kb/score_vector.hpp"

namespace kb {

/// The four aggregation rules mapping a score vector to a single value.
enum class IndexKind { Euclidean, Rectangle, HIndex, Sum };

/// sqrt of the sum of squared entries; 0 for empty or all-zero vectors.
double euclidean_index(const ScoreVector& v);

/// Largest i * v_i over 1-based positions of the sorted vector; 0 when empty.
double rectangle_index(const ScoreVector& v);

/// Largest h with v_h >= h (1-based); 0 when empty or v_1 < 1.
std::size_t h_index(const ScoreVector& v);

/// Plain sum of the entries.
double sum_index(const ScoreVector& v);

double evaluate(IndexKind kind, const ScoreVector& v);

/// Lower-case identifier: "euclidean", "rectangle", "hindex", "sum".
std::string_view index_name(IndexKind kind);
std::optional<IndexKind> parse_index(std::string_view name);

}  // namespace kb
