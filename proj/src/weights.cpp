#include "kb/weights.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "kb/errors.hpp"

namespace kb {

WeightScheme::WeightScheme(std::string name, double w, double f, double sf, double qf, double r16)
    : name_(std::move(name)) {
    by_stage_[static_cast<std::size_t>(Stage::W)] = w;
    by_stage_[static_cast<std::size_t>(Stage::F)] = f;
    by_stage_[static_cast<std::size_t>(Stage::SF)] = sf;
    by_stage_[static_cast<std::size_t>(Stage::QF)] = qf;
    by_stage_[static_cast<std::size_t>(Stage::R16)] = r16;
    for (double v : by_stage_) {
        if (!std::isfinite(v)) {
            throw NonFiniteError("stage weights must be finite");
        }
        if (v < 0.0) {
            throw NegativeScoreError("stage weights must be non-negative");
        }
    }
}

WeightScheme WeightScheme::scaled(double c) const {
    if (!std::isfinite(c) || c <= 0.0) {
        throw NonPositiveScaleError("scale factor must be a positive finite number");
    }
    return WeightScheme(name_ + "*", c * weight_of(Stage::W), c * weight_of(Stage::F),
                        c * weight_of(Stage::SF), c * weight_of(Stage::QF),
                        c * weight_of(Stage::R16));
}

const WeightScheme& preset_scheme(std::string_view name) {
    static const WeightScheme w1("W1", 16, 8, 4, 2, 1);
    static const WeightScheme w2("W2", 5, 4, 3, 2, 1);
    static const WeightScheme w3("W3", 6, 5, 4, 3, 2);
    static const WeightScheme w4("W4", 1, 1, 1, 1, 1);
    if (name == "W1") {
        return w1;
    }
    if (name == "W2") {
        return w2;
    }
    if (name == "W3") {
        return w3;
    }
    if (name == "W4") {
        return w4;
    }
    throw UnknownSchemeError("unknown weight scheme: " + std::string(name));
}

}  // namespace kb
