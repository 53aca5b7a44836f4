#include "kb/stage.hpp"

namespace kb {

std::string_view stage_token(Stage s) {
    switch (s) {
        case Stage::R16:
            return "R16";
        case Stage::QF:
            return "QF";
        case Stage::SF:
            return "SF";
        case Stage::F:
            return "F";
        case Stage::W:
            return "W";
    }
    return "";
}

std::optional<Stage> parse_stage(std::string_view token) {
    for (Stage s : kAllStages) {
        if (token == stage_token(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::size_t expected_count(Stage s) {
    switch (s) {
        case Stage::R16:
            return 8;
        case Stage::QF:
            return 4;
        case Stage::SF:
            return 2;
        case Stage::F:
            return 1;
        case Stage::W:
            return 1;
    }
    return 0;
}

}  // namespace kb
