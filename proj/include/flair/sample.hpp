#pragma once

#include <cmath>

#include "flair/errors.hpp"

namespace flair {

// One timestamped scalar observation. Timestamps are seconds and may be
// fractional; values are unitless reals.
struct Sample {
    double t = 0.0;
    double x = 0.0;

    bool finite() const noexcept { return std::isfinite(t) && std::isfinite(x); }

    friend bool operator==(const Sample& a, const Sample& b) noexcept {
        return a.t == b.t && a.x == b.x;
    }
};

// Maximum tolerated absolute approximation error per stored sample.
// Strictly positive by construction.
class Epsilon {
public:
    explicit Epsilon(double value) : value_(value) {
        if (!std::isfinite(value) || value <= 0.0) throw InvalidEpsilon(value);
    }

    double value() const noexcept { return value_; }

    friend bool operator==(Epsilon a, Epsilon b) noexcept { return a.value_ == b.value_; }

private:
    double value_;
};

}  // namespace flair
