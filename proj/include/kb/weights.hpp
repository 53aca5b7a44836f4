#pragma once

#include <array>
#include <string>
#include <string_view>

#include "kb/stage.hpp"

namespace kb {

/// Maps each stage to a nonnegative finite score. Weights are given in
/// winner-first order (W, F, SF, QF, R16) to match how schemes are quoted.
class WeightScheme {
public:
    WeightScheme(std::string name, double w, double f, double sf, double qf, double r16);

    double weight_of(Stage s) const { return by_stage_[static_cast<std::size_t>(s)]; }
    const std::string& name() const { return name_; }

    WeightScheme scaled(double c) const;

private:
    std::string name_;
    std::array<double, 5> by_stage_{};  // indexed by Stage
};

/// The four built-in schemes:
///   W1 = 16, 8, 4, 2, 1   (doubling)
///   W2 =  5, 4, 3, 2, 1   (linear)
///   W3 =  6, 5, 4, 3, 2   (linear, shifted)
///   W4 =  1, 1, 1, 1, 1   (participation only)
/// Throws UnknownSchemeError for any other name.
const WeightScheme& preset_scheme(std::string_view name);

inline constexpr std::array<std::string_view, 4> kPresetSchemeNames = {"W1", "W2", "W3", "W4"};

}  // namespace kb
