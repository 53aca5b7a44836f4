#pragma once

#include <string>
#include <vector>

#include "kb/csv_io.hpp"

namespace kb {

/// Renders one or more labelled series as a deterministic standalone SVG
/// line chart (800x480). Runs of consecutive present points become
/// polylines; isolated points become circles; missing values leave gaps.
std::string render_series_svg(const std::vector<SeriesCsvRow>& rows, std::string title = {});

}  // namespace kb
