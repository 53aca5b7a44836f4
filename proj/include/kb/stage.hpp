#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace kb {

/// Best stage reached in one season, ordered from earliest exit to title.
enum class Stage { R16, QF, SF, F, W };

inline constexpr std::array<Stage, 5> kAllStages = {Stage::R16, Stage::QF, Stage::SF, Stage::F,
                                                    Stage::W};

std::string_view stage_token(Stage s);
std::optional<Stage> parse_stage(std::string_view token);

/// How many participants finish a season at each stage: one winner, one
/// losing finalist, two semifinal exits, four quarterfinal exits, eight
/// round-of-16 exits.
std::size_t expected_count(Stage s);

}  // namespace kb
