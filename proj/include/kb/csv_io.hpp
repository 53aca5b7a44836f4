#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kb/analysis.hpp"

namespace kb {

/// Full-precision decimal form (%.17g): parsing the result recovers the
/// exact double.
std::string format_double(double value);

/// One row of a long-format series file.
struct SeriesCsvRow {
    int label = 0;
    std::string entity;
    std::optional<double> value;

    friend bool operator==(const SeriesCsvRow&, const SeriesCsvRow&) = default;
};

/// Serializes rows as `label_year,entity,value` with a header, sorted by
/// (label, entity). Missing values serialize as an empty field.
std::string series_csv(std::vector<SeriesCsvRow> rows);

/// Parses the series format back; throws SyntaxError on malformed input.
std::vector<SeriesCsvRow> parse_series_csv(std::string_view csv);

/// Tags every point of a series with one entity name.
std::vector<SeriesCsvRow> rows_of(const Series& series, std::string_view entity);

/// Serializes a ranking as `rank,entity,value` with a header.
std::string ranking_csv(const RankedList& list);

}  // namespace kb
