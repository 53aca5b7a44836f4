#include "kb/windows.hpp"

#include <string>

#include "kb/errors.hpp"

namespace kb {

std::vector<Window> rolling_windows(const std::vector<int>& seasons, std::size_t length) {
    if (length == 0 || length > seasons.size()) {
        throw WindowTooLongError("window length " + std::to_string(length) +
                                 " not available in " + std::to_string(seasons.size()) +
                                 " seasons");
    }
    std::vector<Window> out;
    for (std::size_t i = 0; i + length <= seasons.size(); ++i) {
        const int first = seasons[i];
        if (seasons[i + length - 1] == first + static_cast<int>(length) - 1) {
            out.push_back(Window{first, length});
        }
    }
    return out;
}

Window full_window(const std::vector<int>& seasons) {
    if (seasons.empty() ||
        seasons.back() - seasons.front() + 1 != static_cast<int>(seasons.size())) {
        throw WindowTooLongError("seasons do not form one contiguous run");
    }
    return Window{seasons.front(), seasons.size()};
}

}  // namespace kb
