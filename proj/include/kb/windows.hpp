#pragma once

#include <cstddef>
#include <vector>

namespace kb {

/// A contiguous block of seasons. The label is the year after the last
/// season in the window, i.e. first_season + length, matching how a window
/// ending with the 2018/19 campaign is labelled 2019.
struct Window {
    int first_season = 0;
    std::size_t length = 0;

    int label() const { return first_season + static_cast<int>(length); }
    int last_season() const { return first_season + static_cast<int>(length) - 1; }
    bool contains(int season) const {
        return season >= first_season && season <= last_season();
    }

    friend bool operator==(const Window&, const Window&) = default;
};

/// All windows of `length` consecutive seasons present in `seasons` (which
/// must be sorted ascending and distinct). Gaps in the season sequence break
/// runs; only fully populated windows are returned. Throws WindowTooLongError
/// when length is zero or exceeds the number of seasons.
std::vector<Window> rolling_windows(const std::vector<int>& seasons, std::size_t length);

/// The single window spanning every season. Throws WindowTooLongError when
/// `seasons` is empty or not contiguous.
Window full_window(const std::vector<int>& seasons);

}  // namespace kb
