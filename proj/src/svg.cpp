#include "kb/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

namespace kb {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kPlotLeft = 60.0;
constexpr double kPlotRight = 640.0;
constexpr double kPlotTop = 20.0;
constexpr double kPlotBottom = 440.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            case '\'':
                out += "&apos;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string coord(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", v);
    return buffer;
}

std::string value_label(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", v);
    return buffer;
}

}  // namespace

std::string render_series_svg(const std::vector<SeriesCsvRow>& rows, std::string title) {
    std::set<int> label_set;
    std::set<std::string> entity_set;
    double max_value = 0.0;
    for (const auto& row : rows) {
        label_set.insert(row.label);
        entity_set.insert(row.entity);
        if (row.value && *row.value > max_value) {
            max_value = *row.value;
        }
    }
    const std::vector<int> labels(label_set.begin(), label_set.end());
    const std::vector<std::string> entities(entity_set.begin(), entity_set.end());
    const double y_top = max_value > 0.0 ? max_value * 1.05 : 1.0;

    const auto x_of = [&labels](int label) {
        if (labels.size() < 2) {
            return (kPlotLeft + kPlotRight) / 2.0;
        }
        const double t = static_cast<double>(label - labels.front()) /
                         static_cast<double>(labels.back() - labels.front());
        return kPlotLeft + t * (kPlotRight - kPlotLeft);
    };
    const auto y_of = [y_top](double value) {
        return kPlotBottom - value / y_top * (kPlotBottom - kPlotTop);
    };

    // label -> entity -> value; only present values are drawable.
    std::map<std::string, std::map<int, double>> by_entity;
    for (const auto& row : rows) {
        if (row.value) {
            by_entity[row.entity][row.label] = *row.value;
        }
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"480\" viewBox=\"0 0 800 480\">\n";
    if (!title.empty()) {
        svg += "<title>" + xml_escape(title) + "</title>\n";
    }
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"480\" fill=\"white\"/>\n";

    svg += "<line x1=\"" + coord(kPlotLeft) + "\" y1=\"" + coord(kPlotBottom) + "\" x2=\"" +
           coord(kPlotRight) + "\" y2=\"" + coord(kPlotBottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + coord(kPlotLeft) + "\" y1=\"" + coord(kPlotTop) + "\" x2=\"" +
           coord(kPlotLeft) + "\" y2=\"" + coord(kPlotBottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (int label : labels) {
        const double x = x_of(label);
        svg += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(kPlotBottom) + "\" x2=\"" +
               coord(x) + "\" y2=\"" + coord(kPlotBottom + 5.0) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + coord(x) + "\" y=\"" + coord(kPlotBottom + 20.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               std::to_string(label) + "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double value = y_top * static_cast<double>(i) / 4.0;
        const double y = y_of(value);
        svg += "<line x1=\"" + coord(kPlotLeft - 5.0) + "\" y1=\"" + coord(y) + "\" x2=\"" +
               coord(kPlotLeft) + "\" y2=\"" + coord(y) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + coord(kPlotLeft - 8.0) + "\" y=\"" + coord(y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               value_label(value) + "</text>\n";
    }

    for (std::size_t e = 0; e < entities.size(); ++e) {
        const auto& points = by_entity[entities[e]];
        const char* color = kPalette[e % kPaletteSize];

        // Runs of consecutive labelled points become polylines; isolated
        // points become circles.
        std::vector<std::pair<double, double>> run;
        const auto flush = [&svg, &run, color]() {
            if (run.size() >= 2) {
                svg += "<polyline fill=\"none\" stroke=\"";
                svg += color;
                svg += "\" stroke-width=\"2\" points=\"";
                for (std::size_t i = 0; i < run.size(); ++i) {
                    if (i > 0) {
                        svg += ' ';
                    }
                    svg += coord(run[i].first) + "," + coord(run[i].second);
                }
                svg += "\"/>\n";
            } else if (run.size() == 1) {
                svg += "<circle cx=\"" + coord(run[0].first) + "\" cy=\"" +
                       coord(run[0].second) + "\" r=\"3\" fill=\"";
                svg += color;
                svg += "\"/>\n";
            }
            run.clear();
        };
        for (int label : labels) {
            const auto it = points.find(label);
            if (it == points.end()) {
                flush();
            } else {
                run.emplace_back(x_of(label), y_of(it->second));
            }
        }
        flush();
    }

    for (std::size_t e = 0; e < entities.size(); ++e) {
        const double y = kPlotTop + 10.0 + 18.0 * static_cast<double>(e);
        svg += "<rect x=\"" + coord(kPlotRight + 12.0) + "\" y=\"" + coord(y - 8.0) +
               "\" width=\"12\" height=\"12\" fill=\"";
        svg += kPalette[e % kPaletteSize];
        svg += "\"/>\n";
        svg += "<text x=\"" + coord(kPlotRight + 30.0) + "\" y=\"" + coord(y + 2.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(entities[e]) +
               "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace kb
