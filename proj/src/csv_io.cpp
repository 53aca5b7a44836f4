#include "kb/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "kb/errors.hpp"

namespace kb {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

namespace {

constexpr std::string_view kSeriesHeader = "label_year,entity,value";

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

bool row_order(const SeriesCsvRow& a, const SeriesCsvRow& b) {
    if (a.label != b.label) {
        return a.label < b.label;
    }
    return a.entity < b.entity;
}

}  // namespace

std::string series_csv(std::vector<SeriesCsvRow> rows) {
    std::sort(rows.begin(), rows.end(), row_order);
    std::string out{kSeriesHeader};
    out += '\n';
    for (const auto& row : rows) {
        out += std::to_string(row.label);
        out += ',';
        out += row.entity;
        out += ',';
        if (row.value) {
            out += format_double(*row.value);
        }
        out += '\n';
    }
    return out;
}

std::vector<SeriesCsvRow> parse_series_csv(std::string_view csv) {
    std::vector<SeriesCsvRow> rows;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t newline = csv.find('\n', start);
        const std::size_t end = newline == std::string_view::npos ? csv.size() : newline;
        const std::string_view line = strip_cr(csv.substr(start, end - start));
        ++line_no;
        start = end + 1;
        if (newline == std::string_view::npos && line.empty()) {
            break;
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kSeriesHeader) {
                throw SyntaxError(line_no,
                                  "expected header '" + std::string(kSeriesHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        const std::size_t first_comma = line.find(',');
        const std::size_t second_comma =
            first_comma == std::string_view::npos ? std::string_view::npos
                                                  : line.find(',', first_comma + 1);
        if (second_comma == std::string_view::npos ||
            line.find(',', second_comma + 1) != std::string_view::npos) {
            throw SyntaxError(line_no, "expected 3 comma-separated fields");
        }
        const std::string_view label_field = line.substr(0, first_comma);
        const std::string_view entity_field =
            line.substr(first_comma + 1, second_comma - first_comma - 1);
        const std::string_view value_field = line.substr(second_comma + 1);

        SeriesCsvRow row;
        const auto [label_end, label_ec] = std::from_chars(
            label_field.data(), label_field.data() + label_field.size(), row.label);
        if (label_ec != std::errc{} || label_end != label_field.data() + label_field.size()) {
            throw SyntaxError(line_no, "label_year is not a base-10 integer: '" +
                                           std::string(label_field) + "'");
        }
        if (entity_field.empty()) {
            throw SyntaxError(line_no, "entity name is empty");
        }
        row.entity = std::string(entity_field);
        if (!value_field.empty()) {
            double value = 0.0;
            const auto [value_end, value_ec] = std::from_chars(
                value_field.data(), value_field.data() + value_field.size(), value);
            if (value_ec != std::errc{} ||
                value_end != value_field.data() + value_field.size()) {
                throw SyntaxError(line_no,
                                  "value is not a number: '" + std::string(value_field) + "'");
            }
            row.value = value;
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) {
        throw SyntaxError(1, "expected header '" + std::string(kSeriesHeader) + "'");
    }
    return rows;
}

std::vector<SeriesCsvRow> rows_of(const Series& series, std::string_view entity) {
    std::vector<SeriesCsvRow> rows;
    rows.reserve(series.points.size());
    for (const auto& point : series.points) {
        rows.push_back(SeriesCsvRow{point.label, std::string(entity), point.value});
    }
    return rows;
}

std::string ranking_csv(const RankedList& list) {
    std::string out = "rank,entity,value\n";
    for (const auto& entry : list.entries) {
        out += std::to_string(entry.rank);
        out += ',';
        out += entry.entity;
        out += ',';
        out += format_double(entry.value);
        out += '\n';
    }
    return out;
}

}  // namespace kb
